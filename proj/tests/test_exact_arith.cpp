#include "doctest.h"

#include "bstower/arith/integer_factor.hpp"
#include "bstower/arith/mod_poly.hpp"
#include "bstower/arith/real_roots.hpp"

#include <random>
#include <set>

using namespace bstower;

namespace {

IntPoly const f1 = IntPoly::parse("x^6 + x^4 - 4*x^3 - 7*x^2 - x + 1");
IntPoly const f2 = IntPoly::parse("x^6 - x^5 - 10*x^4 + 4*x^3 + 29*x^2 + 3*x - 13");

// Oracle: determinant of the Sylvester matrix by Bareiss elimination.
Integer sylvester_det(IntPoly const& a, IntPoly const& b)
{
    int m = a.degree(), n = b.degree(), N = m + n;
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(N), std::vector<Integer>(static_cast<std::size_t>(N)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            s[r][r + j] = a.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            s[n + r][r + j] = b.coeff(n - j);
    Integer prev = 1;
    int sgn_ = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (s[k][k] == 0) {
            int piv = k + 1;
            while (piv < N && s[piv][k] == 0)
                ++piv;
            if (piv == N)
                return 0;
            std::swap(s[k], s[piv]);
            sgn_ = -sgn_;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                Integer v = s[i][j] * s[k][k] - s[i][k] * s[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                s[i][j] = v;
            }
        }
        prev = s[k][k];
    }
    return sgn_ * s[N - 1][N - 1];
}

IntPoly random_poly(std::mt19937_64& rng, int deg, int range, bool monic = false)
{
    std::uniform_int_distribution<long> d(-range, range);
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = d(rng);
    while (c.back() == 0)
        c.back() = d(rng);
    if (monic)
        c.back() = 1;
    return IntPoly(c);
}

// Oracle: Vincent-Collins-Akritas root counting with Descartes' rule.
int descartes(std::vector<Integer> const& c)
{
    int v = 0, last = 0;
    for (auto const& x : c) {
        int s = sgn(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

// (x+1)^n p(1/(x+1)) reversed-Taylor transform
std::vector<Integer> taylor_shift_one(std::vector<Integer> c)
{
    std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j)
            c[j - 1] += c[j];
    return c;
}

int roots_in_unit_interval(std::vector<Integer> c)
{
    // Roots of c in (0, 1).
    std::vector<Integer> rev(c.rbegin(), c.rend());
    int v = descartes(taylor_shift_one(rev));
    if (v <= 1)
        return v;
    std::size_t n = c.size() - 1;
    std::vector<Integer> half(c.size());
    for (std::size_t i = 0; i <= n; ++i) {
        half[i] = c[i];
        mpz_mul_2exp(half[i].get_mpz_t(), half[i].get_mpz_t(), static_cast<mp_bitcnt_t>(n - i));
    }
    std::vector<Integer> right = taylor_shift_one(half);
    bool mid_root = right[0] == 0;
    return roots_in_unit_interval(half) + roots_in_unit_interval(right) + (mid_root ? 1 : 0);
}

int positive_roots(std::vector<Integer> c)
{
    // (0,1), {1}, (1,inf) via x -> 1/x
    Integer at1 = 0;
    for (auto const& x : c)
        at1 += x;
    std::vector<Integer> rev(c.rbegin(), c.rend());
    return roots_in_unit_interval(c) + (at1 == 0 ? 1 : 0) + roots_in_unit_interval(rev);
}

int oracle_real_root_count(IntPoly const& a)
{
    std::vector<Integer> c = a.coeffs();
    int zero = 0;
    while (c.front() == 0) {
        c.erase(c.begin());
        zero = 1;
    }
    std::vector<Integer> neg(c);
    for (std::size_t i = 1; i < neg.size(); i += 2)
        neg[i] = -neg[i];
    // trailing zeros in the reversed form break the unit-interval transform
    auto strip = [](std::vector<Integer> v) {
        while (v.size() > 1 && v.back() == 0)
            v.pop_back();
        return v;
    };
    return zero + positive_roots(strip(c)) + positive_roots(strip(neg));
}

}  // namespace

TEST_CASE("resultant sign convention and special values")
{
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    CHECK(sylvester_det(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    CHECK(resultant(f1, IntPoly{0, 1}) == 1);
    CHECK(resultant(f1, f1) == 0);
    CHECK_THROWS_WITH_AS(resultant(IntPoly(), f1), "undefined resultant", Error);
}

TEST_CASE("resultant agrees with the Sylvester determinant")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        IntPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
        IntPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
        REQUIRE(resultant(a, b) == sylvester_det(a, b));
        int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
        REQUIRE(resultant(a, b) == sign * resultant(b, a));
    }
}

TEST_CASE("discriminant values")
{
    CHECK(discriminant(IntPoly{1, 0, 1}) == -4);
    CHECK(discriminant(f1) == -816707);
    CHECK(discriminant(f1) == -23 * 35509);
    CHECK(discriminant(f2) == 3527069);
    CHECK(discriminant(f2) == Integer(7 * 7 * 7 * 7) * 13 * 113);
    CHECK_THROWS_AS(discriminant(IntPoly::constant(5)), Error);
}

TEST_CASE("discriminant of a product")
{
    std::mt19937_64 rng(12);
    int done = 0;
    while (done < 100) {
        IntPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 4), 9, true);
        IntPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 4), 9, true);
        Integer r = resultant(a, b);
        if (r == 0)
            continue;
        REQUIRE(discriminant(a * b) == discriminant(a) * discriminant(b) * r * r);
        ++done;
    }
}

TEST_CASE("Sturm root counts")
{
    CHECK(sturm_real_root_count(IntPoly{1, 0, 1}) == 0);
    CHECK(sturm_real_root_count(f1) == 4);
    CHECK(sturm_real_root_count(f2) == 6);
    CHECK_THROWS_AS(sturm_real_root_count(IntPoly{1, 2, 1}), Error);
    CHECK(isolate_real_roots(f1).size() == 4);
}

TEST_CASE("Sturm agrees with the Descartes bisection oracle")
{
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 200) {
        IntPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 6), 12);
        if (a.degree() > 1 && discriminant(a) == 0)
            continue;
        REQUIRE(sturm_real_root_count(a) == oracle_real_root_count(a));
        ++done;
    }
}

TEST_CASE("real root isolation and sign certification")
{
    IntPoly a{-2, 0, 1};  // roots +-sqrt 2
    auto roots = isolate_real_roots(a);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi <= 0);
    CHECK(roots[1].lo >= 0);
    CHECK(sign_at_root(a, roots[1], IntPoly{0, 1}) == 1);
    CHECK(sign_at_root(a, roots[0], IntPoly{0, 1}) == -1);
    CHECK(sign_at_root(a, roots[1], IntPoly{-141, 100}) == 1);   // sqrt2 > 1.41
    CHECK(sign_at_root(a, roots[1], IntPoly{-1415, 1000}) == -1);
    CHECK(sign_at_root(a, roots[1], IntPoly{-2, 0, 1}) == 0);
    CHECK(sign_at_root(a, roots[0], IntPoly{0, 2, 0, -1}) == 0);
    auto exact = isolate_real_roots(IntPoly{-6, 1, 1});  // roots -3, 2
    REQUIRE(exact.size() == 2);
    CHECK(sign_at_root(IntPoly{-6, 1, 1}, exact[1], IntPoly{-2, 1}) == 0);
}

TEST_CASE("factor degrees mod p")
{
    auto d = factor_degrees_mod_p(IntPoly{1, 0, 1}, 5);
    CHECK(d == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});

    int linear7 = 0;
    for (auto const& [deg, m] : factor_degrees_mod_p(f1, 7))
        linear7 += deg == 1;
    CHECK(linear7 >= 1);

    // Brute-force roots of f1 over F_3.
    int roots3 = 0;
    for (long x = 0; x < 3; ++x)
        roots3 += f1.eval(Integer(x)) % 3 == 0;
    CHECK(roots3 == 1);
    int linear3 = 0;
    for (auto const& [deg, m] : factor_degrees_mod_p(f1, 3))
        linear3 += deg == 1 ? m : 0;
    CHECK(linear3 == 1);

    // f2 is the cube of x^2+2x+2 mod 7
    auto f = factor_mod_p(f2, 7);
    REQUIRE(f.size() == 1);
    CHECK(f[0].degree == 2);
    CHECK(f[0].multiplicity == 3);
    CHECK(f[0].poly == ModPoly(7, {2, 2, 1}));

    CHECK_THROWS_WITH_AS(factor_mod_p(IntPoly{7, 14}, 7), "polynomial vanishes mod 7", Error);
}

TEST_CASE("factorization mod p reconstructs the polynomial")
{
    std::mt19937_64 rng(14);
    auto primes = primes_up_to(50);
    for (int trial = 0; trial < 300; ++trial) {
        std::uint64_t p = primes[rng() % primes.size()];
        IntPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 8), 40);
        ModPoly am = ModPoly::from_int_poly(a, p);
        if (am.is_zero())
            continue;
        auto factors = factor_mod_p(a, p);
        int total = 0;
        ModPoly prod = ModPoly::constant(p, am.leading());
        for (auto const& fac : factors) {
            REQUIRE(is_irreducible(fac.poly));
            total += fac.degree * fac.multiplicity;
            for (int i = 0; i < fac.multiplicity; ++i)
                prod = prod * fac.poly;
        }
        REQUIRE(total == am.degree());
        REQUIRE(prod == am);
    }
}

TEST_CASE("quadratic character against exhaustive squaring")
{
    CHECK(is_square_in_residue_field(ModPoly(5, {0, 1}), ModPoly::constant(5, 4)) == SquareClass::square);
    CHECK(is_square_in_residue_field(ModPoly(5, {0, 1}), ModPoly::constant(5, 0)) == SquareClass::zero);
    CHECK_THROWS_AS(is_square_in_residue_field(ModPoly(5, {1, 0, 1}), ModPoly::constant(5, 2)), Error);

    std::mt19937_64 rng(15);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int d = 1; d <= 3; ++d) {
            std::uint64_t q = 1;
            for (int i = 0; i < d; ++i)
                q *= p;
            if (q > 343)
                continue;
            ModPoly g;
            do {
                std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
                for (auto& x : c)
                    x = rng() % p;
                c.back() = 1;
                g = ModPoly(p, c);
            } while (!is_irreducible(g));
            auto element = [&](std::uint64_t idx) {
                std::vector<std::uint64_t> c(static_cast<std::size_t>(d));
                for (auto& x : c) {
                    x = idx % p;
                    idx /= p;
                }
                return ModPoly(p, c);
            };
            std::set<std::vector<std::uint64_t>> squares;
            for (std::uint64_t i = 1; i < q; ++i) {
                ModPoly e = element(i);
                squares.insert(((e * e) % g).coeffs());
            }
            for (std::uint64_t i = 0; i < q; ++i) {
                ModPoly e = element(i);
                SquareClass want = e.is_zero() ? SquareClass::zero
                                   : squares.count(e.coeffs()) ? SquareClass::square
                                                               : SquareClass::nonsquare;
                REQUIRE(is_square_in_residue_field(g, e) == want);
            }
        }
    }
}

TEST_CASE("integer factorization")
{
    auto f = factor_integer(Integer("15622982921"));
    std::map<Integer, int> want{{7, 1}, {13, 1}, {19, 2}, {23, 2}, {29, 1}, {31, 1}};
    CHECK(f == want);
    auto g = factor_integer(Integer("3527053069602078368989"));
    std::map<Integer, int> want2{{7, 2}, {13, 5}, {29, 4}, {41, 4}, {97, 1}};
    CHECK(g == want2);
    CHECK(prime_power(Integer(49)) == std::pair<Integer, int>{7, 2});
    CHECK(prime_power(Integer(12)).second == 0);
    Integer big = Integer("1000000007") * Integer("998244353");
    CHECK(factor_integer(big).size() == 2);
    CHECK_THROWS_AS(factor_integer(Integer(0)), Error);
}

TEST_CASE("outward rounding")
{
    Real x = real_log(Integer(7));
    Rational lo = round_to_rational(x, Rounding::down);
    Rational hi = round_to_rational(x, Rounding::up);
    CHECK(lo < hi);
    CHECK(to_real(lo) <= x);
    CHECK(to_real(hi) >= x);
    CHECK(abs(to_real(hi - lo)) < Real("1e-58"));
    CHECK(format_fixed(Rational(56498, 100000), 4) == "0.5650");
    CHECK(format_fixed(Rational(-1, 3), 3) == "-0.333");
}

TEST_CASE("polynomial parsing")
{
    CHECK(IntPoly::parse("-9*x^5 + 6x^4 - x + 1") == IntPoly{1, -1, 0, 0, 6, -9});
    CHECK(IntPoly::parse("x^6+x^4-4x^3-7x^2-x+1") == f1);
    CHECK(IntPoly::parse(f2.to_string()) == f2);
    CHECK_THROWS_AS(IntPoly::parse("2 + + x"), Error);
    CHECK_THROWS_AS(IntPoly::parse(""), Error);
    CHECK_THROWS_AS(IntPoly::parse("x^"), Error);
}
