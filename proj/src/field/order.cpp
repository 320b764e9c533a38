#include "bstower/field/order.hpp"

#include "bstower/arith/integer_factor.hpp"

#include <algorithm>
#include <set>

namespace bstower {

bool OrderElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](Integer const& c) { return c == 0; });
}

namespace {

std::uint64_t small_prime(Integer const& p)
{
    if (p < 2 || !mpz_fits_ulong_p(p.get_mpz_t()) || p.get_ui() >= (std::uint64_t{1} << 62))
        throw Error("prime " + p.get_str() + " outside the supported range");
    return p.get_ui();
}

// Remainder of a modulo the monic polynomial f.
IntPoly reduce_monic(IntPoly const& a, IntPoly const& f)
{
    int n = f.degree();
    if (a.degree() < n)
        return a;
    std::vector<Integer> r = a.coeffs();
    for (int k = a.degree(); k >= n; --k) {
        Integer lead = r[static_cast<std::size_t>(k)];
        if (lead == 0)
            continue;
        for (int j = 0; j <= n; ++j)
            r[static_cast<std::size_t>(k - n + j)] -= lead * f.coeffs()[static_cast<std::size_t>(j)];
    }
    return IntPoly(std::move(r));
}

// Subset sums of the factor degrees of f mod p, counting multiplicity.
std::set<int> degree_sums(IntPoly const& f, std::uint64_t p)
{
    std::set<int> sums{0};
    for (auto const& [d, m] : factor_degrees_mod_p(f, p)) {
        for (int i = 0; i < m; ++i) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + d);
            sums = std::move(next);
        }
    }
    return sums;
}

}  // namespace

Integer PrimeIdeal::norm() const
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(residue_degree));
    return r;
}

bool PrimeIdeal::contains(OrderElement const& a) const
{
    return (ModPoly::from_int_poly(a.as_poly(), residue.modulus()) % residue).is_zero();
}

std::string PrimeIdeal::describe() const { return "(" + p.get_str() + ", " + residue.to_string() + ")"; }

bool certify_irreducible(IntPoly const& f, std::uint64_t max_prime)
{
    int n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    Integer d = discriminant(f);
    if (d == 0)
        return false;
    std::set<int> possible;
    for (int i = 1; i < n; ++i)
        possible.insert(i);
    for (std::uint64_t p : primes_up_to(max_prime)) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), p) || mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
            continue;
        std::set<int> sums = degree_sums(f, p);
        std::set<int> keep;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(keep, keep.begin()));
        possible = std::move(keep);
        if (possible.empty())
            return true;
    }
    return false;
}

FieldOrder::FieldOrder(IntPoly f) : f_(std::move(f))
{
    if (f_.degree() < 1)
        throw Error("defining polynomial must have degree at least 1");
    if (f_.leading() != 1)
        throw Error("defining polynomial must be monic");
    if (!certify_irreducible(f_))
        throw Error("defining polynomial " + f_.to_string() + " is not certified irreducible");
    disc_ = f_.degree() == 1 ? Integer(1) : discriminant(f_);
    real_roots_ = isolate_real_roots(f_);
    r1_ = static_cast<int>(real_roots_.size());
    r2_ = (degree() - r1_) / 2;
}

void FieldOrder::check(OrderElement const& a) const
{
    if (static_cast<int>(a.size()) != degree())
        throw Error("element has " + std::to_string(a.size()) + " coordinates, expected " + std::to_string(degree()));
}

OrderElement FieldOrder::element(IntPoly const& a) const
{
    IntPoly r = reduce_monic(a, f_);
    std::vector<Integer> c(static_cast<std::size_t>(degree()));
    for (int i = 0; i <= r.degree(); ++i)
        c[static_cast<std::size_t>(i)] = r.coeff(i);
    return OrderElement(std::move(c));
}

OrderElement FieldOrder::one() const { return element(IntPoly::constant(1)); }

OrderElement FieldOrder::zero() const { return element(IntPoly()); }

OrderElement FieldOrder::from_ints(std::vector<long> const& low_first) const
{
    std::vector<Integer> c;
    for (long v : low_first)
        c.emplace_back(v);
    return element(IntPoly(std::move(c)));
}

OrderElement FieldOrder::add(OrderElement const& a, OrderElement const& b) const
{
    check(a);
    check(b);
    std::vector<Integer> c(a.coords());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coords()[i];
    return OrderElement(std::move(c));
}

OrderElement FieldOrder::neg(OrderElement const& a) const { return scale(Integer(-1), a); }

OrderElement FieldOrder::sub(OrderElement const& a, OrderElement const& b) const { return add(a, neg(b)); }

OrderElement FieldOrder::scale(Integer const& c, OrderElement const& a) const
{
    check(a);
    std::vector<Integer> r(a.coords());
    for (auto& x : r)
        x *= c;
    return OrderElement(std::move(r));
}

OrderElement FieldOrder::mul(OrderElement const& a, OrderElement const& b) const
{
    check(a);
    check(b);
    return element(a.as_poly() * b.as_poly());
}

OrderElement FieldOrder::product(std::vector<OrderElement> const& es) const
{
    if (es.empty())
        throw Error("product of an empty list");
    OrderElement r = es.front();
    check(r);
    for (std::size_t i = 1; i < es.size(); ++i)
        r = mul(r, es[i]);
    return r;
}

Integer FieldOrder::norm(OrderElement const& a) const
{
    check(a);
    if (a.is_zero())
        throw Error("norm of the zero element");
    if (degree() == 1)
        return a.coords()[0];
    return resultant(f_, a.as_poly());
}

std::optional<OrderElement> FieldOrder::divide_exact(OrderElement const& a, OrderElement const& b) const
{
    check(a);
    if (b.is_zero())
        throw Error("division by the zero element");
    std::size_t n = static_cast<std::size_t>(degree());
    // Column j of the system is b * xi^j; solve M x = a over Q.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    OrderElement col = b;
    OrderElement xi = element(IntPoly::monomial(1, 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = col.coords()[i];
        col = mul(col, xi);
    }
    for (std::size_t i = 0; i < n; ++i)
        m[i][n] = a.coords()[i];
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw Error("singular multiplication matrix");
        std::swap(m[c], m[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational t = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j)
                m[i][j] -= t * m[c][j];
        }
    }
    std::vector<Integer> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = m[i][n] / m[i][i];
        if (v.get_den() != 1)
            return std::nullopt;
        q[i] = v.get_num();
    }
    return OrderElement(std::move(q));
}

ModPoly FieldOrder::reduce(OrderElement const& a, ModPoly const& g) const
{
    check(a);
    return ModPoly::from_int_poly(a.as_poly(), g.modulus()) % g;
}

DedekindResult FieldOrder::dedekind(Integer const& p_in) const
{
    std::uint64_t p = small_prime(p_in);
    DedekindResult res;
    res.p = p_in;
    res.factors = factor_mod_p(f_, p);
    IntPoly g = IntPoly::constant(1), h = IntPoly::constant(1);
    ModPoly gbar = ModPoly::constant(p, 1), hbar = ModPoly::constant(p, 1);
    for (auto const& fac : res.factors) {
        g = g * fac.poly.lift();
        gbar = gbar * fac.poly;
        for (int i = 1; i < fac.multiplicity; ++i) {
            h = h * fac.poly.lift();
            hbar = hbar * fac.poly;
        }
    }
    IntPoly F = (g * h - f_).divided_by(Integer(p_in));
    ModPoly Fbar = ModPoly::from_int_poly(F, p);
    res.maximal = gcd(gcd(Fbar, gbar), hbar).degree() == 0;
    return res;
}

std::vector<PrimeIdeal> FieldOrder::primes_above(Integer const& p) const
{
    if (!is_prime(p))
        throw Error(p.get_str() + " is not prime");
    DedekindResult d = dedekind(p);
    if (!d.maximal)
        throw Error("order not maximal at " + p.get_str());
    std::vector<PrimeIdeal> out;
    for (auto const& fac : d.factors)
        out.push_back(PrimeIdeal{p, fac.poly, fac.multiplicity, fac.degree});
    return out;
}

std::vector<DedekindResult> FieldOrder::verify_maximal() const
{
    std::vector<DedekindResult> out;
    if (degree() == 1)
        return out;
    for (auto const& [p, m] : factor_integer(disc_)) {
        out.push_back(dedekind(p));
        if (!out.back().maximal)
            throw Error("order not maximal at " + p.get_str());
    }
    return out;
}

Integer FieldOrder::field_discriminant() const
{
    verify_maximal();
    return disc_;
}

std::vector<int> FieldOrder::real_signs(OrderElement const& a) const
{
    check(a);
    if (a.is_zero())
        throw Error("sign of the zero element");
    std::vector<int> out;
    for (auto const& iv : real_roots_)
        out.push_back(sign_at_root(f_, iv, a.as_poly()));
    return out;
}

PrimeCertificate verify_prime_element(FieldOrder const& k, OrderElement const& e)
{
    PrimeCertificate cert;
    cert.norm = abs(k.norm(e));
    if (cert.norm == 1) {
        cert.reason = "not certified prime: element is a unit";
        return cert;
    }
    auto [p, m] = prime_power(cert.norm);
    if (p == 0) {
        cert.reason = "not certified prime: norm " + cert.norm.get_str() + " is not a prime power";
        return cert;
    }
    std::vector<PrimeIdeal> primes;
    try {
        primes = k.primes_above(p);
    } catch (Error const& err) {
        cert.reason = std::string("not certified prime: ") + err.what();
        return cert;
    }
    for (auto const& q : primes) {
        if (q.residue_degree == m && q.contains(e)) {
            cert.certified = true;
            cert.ideal = q;
            return cert;
        }
    }
    cert.reason = "not certified prime: no prime of norm " + cert.norm.get_str() + " contains the element";
    return cert;
}

std::vector<PrimeIdeal> prime_divisors(FieldOrder const& k, OrderElement const& a, bool require_squarefree)
{
    Integer n = k.norm(a);
    std::vector<PrimeIdeal> out;
    if (abs(n) == 1)
        return out;
    for (auto const& [p, v] : factor_integer(n)) {
        int fsum = 0;
        for (auto const& q : k.primes_above(p)) {
            if (q.contains(a)) {
                out.push_back(q);
                fsum += q.residue_degree;
            }
        }
        if (require_squarefree && fsum != v)
            throw Error("element is not squarefree as an ideal above " + p.get_str());
    }
    return out;
}

}  // namespace bstower
