#include "bstower/field/quadratic_extension.hpp"

#include "bstower/arith/integer_factor.hpp"

namespace bstower {

bool check_square_witness(FieldOrder const& k, OrderElement const& eta, SquareWitness const& w)
{
    return k.add(k.mul(w.beta, w.beta), k.scale(Integer(4), w.gamma)) == eta;
}

std::optional<SquareWitness> find_square_witness(FieldOrder const& k, OrderElement const& eta)
{
    k.check(eta);
    int n = k.degree();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<Integer> b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            b[static_cast<std::size_t>(i)] = (mask >> i) & 1UL;
        OrderElement beta(std::move(b));
        OrderElement d = k.sub(eta, k.mul(beta, beta));
        bool divisible = true;
        for (auto const& c : d.coords())
            divisible = divisible && mpz_divisible_ui_p(c.get_mpz_t(), 4);
        if (!divisible)
            continue;
        std::vector<Integer> g(d.coords());
        for (auto& c : g)
            c /= 4;
        return SquareWitness{beta, OrderElement(std::move(g))};
    }
    return std::nullopt;
}

RelativeDiscriminant relative_quadratic_discriminant(FieldOrder const& k, OrderElement const& eta)
{
    RelativeDiscriminant rel;
    rel.ramified = prime_divisors(k, eta, true);
    rel.witness = find_square_witness(k, eta);
    rel.norm = abs(k.norm(eta));
    if (!rel.witness) {
        Integer four_n;
        mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(k.degree()));
        rel.norm *= four_n;
        for (auto const& q : k.primes_above(Integer(2)))
            if (!q.contains(eta))
                rel.ramified.push_back(q);
    }
    return rel;
}

std::string to_string(ExtensionKind kind)
{
    switch (kind) {
    case ExtensionKind::totally_complex:
        return "totally complex";
    case ExtensionKind::totally_real:
        return "totally real";
    case ExtensionKind::mixed:
        break;
    }
    return "mixed";
}

std::string to_string(Splitting s)
{
    switch (s) {
    case Splitting::split:
        return "split";
    case Splitting::inert:
        return "inert";
    case Splitting::ramified:
        break;
    }
    return "ramified";
}

ExtensionSignature extension_signature(FieldOrder const& k, OrderElement const& eta)
{
    ExtensionSignature sig;
    sig.eta_signs = k.real_signs(eta);
    int positive = 0;
    for (int s : sig.eta_signs)
        positive += s > 0;
    sig.rho = k.r1() - positive;
    sig.r1 = 2 * positive;
    sig.r2 = 2 * k.r2() + sig.rho;
    if (sig.r1 == 0)
        sig.kind = ExtensionKind::totally_complex;
    else if (sig.r2 == 0)
        sig.kind = ExtensionKind::totally_real;
    else
        sig.kind = ExtensionKind::mixed;
    return sig;
}

QuadraticExtension::QuadraticExtension(FieldOrder k, OrderElement eta, std::optional<SquareWitness> witness)
    : k_(std::move(k)), eta_(std::move(eta))
{
    k_.check(eta_);
    if (eta_.is_zero())
        throw Error("eta must be nonzero");
    if (witness) {
        if (!check_square_witness(k_, eta_, *witness))
            throw Error("supplied witness does not satisfy eta = beta^2 + 4*gamma");
        rel_.ramified = prime_divisors(k_, eta_, true);
        rel_.norm = abs(k_.norm(eta_));
        rel_.witness = witness;
    } else {
        rel_ = relative_quadratic_discriminant(k_, eta_);
    }
    Integer dk = k_.field_discriminant();
    abs_disc_ = rel_.norm * dk * dk;
    genus_ = real_log(abs_disc_) / 2;
    sig_ = extension_signature(k_, eta_);
}

namespace {

// Absolute trace F_{2^f} -> F_2 of a in F_2[x]/(g).
bool trace_is_zero(ModPoly const& a, ModPoly const& g)
{
    ModPoly sum = ModPoly::constant(2, 0);
    ModPoly t = a % g;
    for (int i = 0; i < g.degree(); ++i) {
        sum = sum + t;
        t = (t * t) % g;
    }
    return (sum % g).is_zero();
}

}  // namespace

Splitting QuadraticExtension::splitting_at(PrimeIdeal const& q) const
{
    if (q.contains(eta_))
        return Splitting::ramified;
    if (q.p != 2) {
        SquareClass c = is_square_in_residue_field(q.residue, k_.reduce(eta_, q.residue));
        return c == SquareClass::square ? Splitting::split : Splitting::inert;
    }
    if (!rel_.witness)
        return Splitting::ramified;
    // K is generated by a root of X^2 - beta*X - gamma; beta is a unit at q
    // because q does not divide eta. Artin-Schreier: split iff Tr(gamma/beta^2) = 0.
    ModPoly b = k_.reduce(rel_.witness->beta, q.residue);
    ModPoly c = k_.reduce(rel_.witness->gamma, q.residue);
    auto inv = invmod((b * b) % q.residue, q.residue);
    if (!inv)
        throw Error("witness beta vanishes at " + q.describe());
    return trace_is_zero((c * *inv) % q.residue, q.residue) ? Splitting::split : Splitting::inert;
}

KPlace places_above(QuadraticExtension const& K, PrimeIdeal const& q)
{
    KPlace pl;
    pl.below = q;
    pl.splitting = K.splitting_at(q);
    pl.e = q.ramification;
    pl.f = q.residue_degree;
    pl.norm = q.norm();
    pl.count = 1;
    switch (pl.splitting) {
    case Splitting::split:
        pl.count = 2;
        break;
    case Splitting::inert:
        pl.f *= 2;
        pl.norm *= q.norm();
        break;
    case Splitting::ramified:
        pl.e *= 2;
        break;
    }
    return pl;
}

int PlaceTally::count(std::uint64_t q) const
{
    auto it = counts.find(q);
    return it == counts.end() ? 0 : it->second;
}

int PlaceTally::local_degree_sum(std::uint64_t p) const
{
    int s = 0;
    for (auto const& pl : places)
        if (pl.below.p == p)
            s += pl.count * pl.e * pl.f;
    return s;
}

PlaceTally place_tally(QuadraticExtension const& K, std::uint64_t bound)
{
    PlaceTally t;
    t.bound = bound;
    t.degree = K.degree();
    t.n_real = K.signature().r1;
    t.n_complex = K.signature().r2;
    for (std::uint64_t p : primes_up_to(bound)) {
        for (auto const& q : K.base().primes_above(Integer(p))) {
            KPlace pl = places_above(K, q);
            if (pl.norm <= bound)
                t.counts[pl.norm.get_ui()] += pl.count;
            t.places.push_back(std::move(pl));
        }
    }
    return t;
}

NonSquareCertificate certify_nonsquare(FieldOrder const& k, OrderElement const& a, std::uint64_t max_prime)
{
    NonSquareCertificate c;
    if (a.is_zero())
        throw Error("square test of the zero element");
    for (int s : k.real_signs(a)) {
        if (s < 0) {
            c.certified = true;
            c.reason = "negative at a real embedding";
            return c;
        }
    }
    Integer n = k.norm(a);
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) {
        c.certified = true;
        c.reason = "norm " + n.get_str() + " is not a square";
        return c;
    }
    for (std::uint64_t p : primes_up_to(max_prime)) {
        if (p == 2 || mpz_divisible_ui_p(n.get_mpz_t(), p) ||
            mpz_divisible_ui_p(k.poly_discriminant().get_mpz_t(), p))
            continue;
        for (auto const& q : k.primes_above(Integer(p))) {
            if (is_square_in_residue_field(q.residue, k.reduce(a, q.residue)) == SquareClass::nonsquare) {
                c.certified = true;
                c.reason = "non-residue modulo " + q.describe();
                return c;
            }
        }
    }
    c.reason = "all local tests passed";
    return c;
}

}  // namespace bstower
