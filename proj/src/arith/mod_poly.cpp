#include "bstower/arith/mod_poly.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace bstower {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw Error("zero has no inverse mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (p < 2)
        throw Error("modulus must be a prime");
    for (auto& c : c_)
        c %= p_;
    normalize();
}

ModPoly ModPoly::from_int_poly(IntPoly const& a, std::uint64_t p)
{
    std::vector<std::uint64_t> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p);
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c}); }

ModPoly ModPoly::x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

void ModPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

ModPoly ModPoly::monic() const
{
    if (is_zero())
        return *this;
    std::uint64_t inv = inv_mod(leading(), p_);
    std::vector<std::uint64_t> c(c_);
    for (auto& x : c)
        x = mul_mod(x, inv, p_);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const
{
    if (c_.size() <= 1)
        return ModPoly(p_, {});
    std::vector<std::uint64_t> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = mul_mod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(d));
}

IntPoly ModPoly::lift() const
{
    std::vector<Integer> c;
    c.reserve(c_.size());
    for (auto v : c_)
        c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

std::string ModPoly::to_string(char var) const
{
    return lift().to_string(var) + " (mod " + std::to_string(p_) + ")";
}

ModPoly operator+(ModPoly const& a, ModPoly const& b)
{
    std::uint64_t p = a.p_;
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r[i] = s >= p ? s - p : s;
    }
    return ModPoly(p, std::move(r));
}

ModPoly operator-(ModPoly const& a, ModPoly const& b)
{
    std::uint64_t p = a.p_;
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = a.coeff(static_cast<int>(i)), y = b.coeff(static_cast<int>(i));
        r[i] = x >= y ? x - y : x + (p - y);
    }
    return ModPoly(p, std::move(r));
}

ModPoly operator*(ModPoly const& a, ModPoly const& b)
{
    std::uint64_t p = a.p_;
    if (a.is_zero() || b.is_zero())
        return ModPoly(p, {});
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
            acc[i + j] %= p;
        }
    }
    std::vector<std::uint64_t> r(acc.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<std::uint64_t>(acc[i]);
    return ModPoly(p, std::move(r));
}

ModDivision divmod(ModPoly const& a, ModPoly const& b)
{
    if (b.is_zero())
        throw Error("polynomial division by zero mod p");
    std::uint64_t p = a.modulus();
    if (a.degree() < b.degree())
        return {ModPoly(p, {}), a};
    std::vector<std::uint64_t> r = a.coeffs();
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    std::uint64_t inv = inv_mod(b.leading(), p);
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        std::uint64_t c = mul_mod(r[static_cast<std::size_t>(k)], inv, p);
        q[static_cast<std::size_t>(k - db)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j) {
            std::uint64_t t = mul_mod(c, b.coeff(j), p);
            std::uint64_t& x = r[static_cast<std::size_t>(k - db + j)];
            x = x >= t ? x - t : x + (p - t);
        }
    }
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly operator%(ModPoly const& a, ModPoly const& b) { return divmod(a, b).remainder; }

ModPoly gcd(ModPoly a, ModPoly b)
{
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly powmod(ModPoly const& base, Integer const& e, ModPoly const& m)
{
    if (e < 0)
        throw Error("negative exponent in powmod");
    ModPoly r = ModPoly::constant(m.modulus(), 1) % m;
    ModPoly b = base % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * b) % m;
    }
    return r;
}

std::optional<ModPoly> invmod(ModPoly const& a, ModPoly const& m)
{
    std::uint64_t p = m.modulus();
    ModPoly r0 = m, r1 = a % m;
    ModPoly s0(p, {}), s1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        return std::nullopt;
    std::uint64_t inv = inv_mod(r0.leading(), p);
    return (ModPoly::constant(p, inv) * s0) % m;
}

namespace {

ModPoly exact_quotient(ModPoly const& a, ModPoly const& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error("inexact polynomial division mod p");
    return q;
}

// Coefficientwise p-th root of a polynomial in x^p.
ModPoly pth_root(ModPoly const& a)
{
    std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(p))
        c.push_back(a.coeff(i));
    return ModPoly(p, std::move(c));
}

Integer field_order(std::uint64_t p, int d)
{
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
    return q;
}

}  // namespace

std::vector<std::pair<ModPoly, int>> squarefree_decomposition(ModPoly const& a_in)
{
    ModPoly a = a_in.monic();
    std::vector<std::pair<ModPoly, int>> out;
    if (a.degree() < 1)
        return out;
    std::uint64_t p = a.modulus();
    ModPoly c = gcd(a, a.derivative());
    ModPoly w = exact_quotient(a, c);
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly fac = exact_quotient(w, y);
        if (!fac.is_one())
            out.emplace_back(fac, i);
        w = y;
        c = exact_quotient(c, y);
        ++i;
    }
    if (!c.is_one()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c)))
            out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(ModPoly const& a_in)
{
    ModPoly a = a_in.monic();
    std::uint64_t p = a.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x = ModPoly::x(p);
    ModPoly h = x % a;
    for (int d = 1; a.degree() >= 2 * d; ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), a);
        ModPoly g = gcd(a, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            a = exact_quotient(a, g);
            h = h % a;
        }
    }
    if (a.degree() >= 1)
        out.emplace_back(a, a.degree());
    return out;
}

std::vector<ModPoly> equal_degree_factorization(ModPoly const& a_in, int d)
{
    ModPoly a = a_in.monic();
    std::uint64_t p = a.modulus();
    if (a.degree() == d)
        return {a};
    if (d <= 0 || a.degree() % d != 0)
        throw Error("equal-degree factorization: degree mismatch");

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (p * 1315423911ULL) ^ static_cast<std::uint64_t>(a.degree() * 31 + d));
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    Integer half = (field_order(p, d) - 1) / 2;

    std::vector<ModPoly> pending{a}, done;
    std::size_t target = static_cast<std::size_t>(a.degree() / d);
    while (!pending.empty()) {
        ModPoly f = pending.back();
        pending.pop_back();
        if (f.degree() == d) {
            done.push_back(f);
            continue;
        }
        while (true) {
            std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()));
            for (auto& c : rc)
                c = coeff(rng);
            ModPoly r(p, std::move(rc));
            if (r.degree() < 1)
                continue;
            ModPoly probe;
            if (p == 2) {
                // Absolute trace to F_2: r + r^2 + ... + r^(2^(d-1)).
                ModPoly t = r % f, acc = r % f;
                for (int i = 1; i < d; ++i) {
                    t = (t * t) % f;
                    acc = acc + t;
                }
                probe = acc;
            } else {
                probe = powmod(r, half, f) - ModPoly::constant(p, 1);
            }
            ModPoly g = gcd(f, probe);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                pending.push_back(g);
                pending.push_back(exact_quotient(f, g));
                break;
            }
        }
    }
    if (done.size() != target)
        throw Error("equal-degree factorization lost factors");
    return done;
}

bool is_irreducible(ModPoly const& g)
{
    if (g.degree() < 1)
        return false;
    auto sqf = squarefree_decomposition(g);
    if (sqf.size() != 1 || sqf[0].second != 1)
        return false;
    auto ddf = distinct_degree_factorization(g);
    return ddf.size() == 1 && ddf[0].second == g.degree();
}

std::vector<ModFactor> factor_mod_p(IntPoly const& a, std::uint64_t p)
{
    ModPoly m = ModPoly::from_int_poly(a, p);
    if (m.is_zero())
        throw Error("polynomial vanishes mod " + std::to_string(p));
    std::vector<ModFactor> out;
    for (auto const& [part, mult] : squarefree_decomposition(m)) {
        for (auto const& [group, d] : distinct_degree_factorization(part)) {
            for (auto& g : equal_degree_factorization(group, d))
                out.push_back({g, d, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](ModFactor const& x, ModFactor const& y) {
        if (x.degree != y.degree)
            return x.degree < y.degree;
        return x.poly.coeffs() < y.poly.coeffs();
    });
    return out;
}

std::vector<std::pair<int, int>> factor_degrees_mod_p(IntPoly const& a, std::uint64_t p)
{
    std::vector<std::pair<int, int>> out;
    for (auto const& f : factor_mod_p(a, p))
        out.emplace_back(f.degree, f.multiplicity);
    return out;
}

SquareClass is_square_in_residue_field(ModPoly const& g, ModPoly const& e)
{
    if (!is_irreducible(g))
        throw Error("residue field modulus " + g.to_string() + " is not irreducible");
    ModPoly r = e % g;
    if (r.is_zero())
        return SquareClass::zero;
    std::uint64_t p = g.modulus();
    if (p == 2)
        return SquareClass::square;  // Frobenius is bijective in characteristic 2
    Integer half = (field_order(p, g.degree()) - 1) / 2;
    return powmod(r, half, g).is_one() ? SquareClass::square : SquareClass::nonsquare;
}

}  // namespace bstower
