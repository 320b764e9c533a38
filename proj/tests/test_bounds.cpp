#include "doctest.h"

#include "bstower/bounds/analytic.hpp"
#include "bstower/bounds/lp.hpp"
#include "bstower/bounds/table.hpp"

#include <algorithm>
#include <random>

using namespace bstower;

namespace {

FieldOrder const& k1()
{
    static FieldOrder const k(IntPoly::parse("x^6 + x^4 - 4*x^3 - 7*x^2 - x + 1"));
    return k;
}

FieldOrder const& k2()
{
    static FieldOrder const k(IntPoly::parse("x^6 - x^5 - 10*x^4 + 4*x^3 + 29*x^2 + 3*x - 13"));
    return k;
}

QuadraticExtension const& K1()
{
    static QuadraticExtension const K(
        k1(), k1().neg(k1().element(IntPoly::parse("671x^5 - 467x^4 + 994x^3 - 3360x^2 - 2314x + 961"))));
    return K;
}

QuadraticExtension const& K2()
{
    static QuadraticExtension const K(
        k2(), k2().element(IntPoly::parse("-2993x^5 + 7230x^4 + 18937x^3 - 38788x^2 - 32096x + 44590")));
    return K;
}

struct Example {
    PlaceTally tally;
    std::vector<PhiInterval> phi;
    Real genus;
    BsBounds bounds;
};

Example make_example(QuadraticExtension const& K, std::vector<Integer> const& t_norms, ExtensionKind kind)
{
    Example e;
    e.tally = place_tally(K, 100);
    e.genus = K.genus();
    e.phi = phi_intervals(genus_ratio_limit(K.genus(), K.degree(), t_norms), kind);
    e.bounds = lp_upper_bound(e.tally, e.phi, e.genus);
    return e;
}

Example const& ex1()
{
    static Example const e = make_example(K1(), {Integer(9)}, ExtensionKind::totally_complex);
    return e;
}

Example const& ex2()
{
    static Example const e = make_example(K2(), {Integer(71), Integer(71)}, ExtensionKind::totally_real);
    return e;
}

Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

bool near(Real const& a, char const* b, char const* tol) { return abs(a - Real(b)) <= Real(tol); }

std::vector<PhiInterval> complex_point(char const* v)
{
    return {{Archimedean::real, 0, 0}, {Archimedean::complex, Real(v), Real(v)}};
}

// Solve the square system M y = r exactly; nullopt if singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> M, std::vector<Rational> r)
{
    std::size_t n = r.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M[piv][c] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(M[c], M[piv]);
        std::swap(r[c], r[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0)
                continue;
            Rational f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j)
                M[i][j] -= f * M[c][j];
            r[i] -= f * r[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        r[i] /= M[i][i];
    return r;
}

// Maximum of c.x over A x <= b, x >= 0 by enumerating every basic solution.
Rational vertex_enumeration_max(std::vector<Rational> const& c, std::vector<std::vector<Rational>> const& A,
                                std::vector<Rational> const& b)
{
    std::size_t n = c.size(), m = A.size();
    std::vector<std::vector<Rational>> rows = A;
    std::vector<Rational> rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = -1;
        rows.push_back(e);
        rhs.push_back(0);
    }
    std::optional<Rational> best;
    std::vector<bool> pick(m + n, false);
    std::fill(pick.end() - n, pick.end(), true);
    do {
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> r;
        for (std::size_t i = 0; i < m + n; ++i)
            if (pick[i]) {
                M.push_back(rows[i]);
                r.push_back(rhs[i]);
            }
        auto x = solve(M, r);
        if (!x)
            continue;
        bool feasible = true;
        for (std::size_t i = 0; i < m + n && feasible; ++i) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < n; ++j)
                lhs += rows[i][j] * (*x)[j];
            feasible = lhs <= rhs[i];
        }
        if (!feasible)
            continue;
        Rational v = 0;
        for (std::size_t j = 0; j < n; ++j)
            v += c[j] * (*x)[j];
        if (!best || v > *best)
            best = v;
    } while (std::next_permutation(pick.begin(), pick.end()));
    REQUIRE(best);
    return *best;
}

// Fractional knapsack: max c.x with a.x <= B, 0 <= x <= u, filled greedily by c/a.
Rational greedy_knapsack(std::vector<Rational> const& c, std::vector<Rational> const& a, Rational B,
                         std::vector<Rational> const& u)
{
    std::vector<std::size_t> order(c.size());
    for (std::size_t j = 0; j < order.size(); ++j)
        order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return c[i] * a[j] > c[j] * a[i]; });
    Rational v = 0;
    for (std::size_t j : order) {
        Rational take = std::min<Rational>(u[j], B / a[j]);
        if (take <= 0)
            break;
        v += c[j] * take;
        B -= a[j] * take;
    }
    return v;
}

void check_knapsack_oracle(LpModel const& m, Rational const& optimum)
{
    std::size_t n = m.variables.size();
    std::vector<Rational> upper(n);
    std::vector<bool> seen(n, false);
    for (auto const& row : m.rows) {
        if (row.kind == LpRow::Kind::basic_inequality)
            continue;
        std::size_t nonzero = 0, j = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (row.coeffs[k] != 0) {
                ++nonzero;
                j = k;
            }
        REQUIRE(nonzero == 1);
        Rational u = row.rhs / row.coeffs[j];
        upper[j] = seen[j] ? std::min(upper[j], u) : u;
        seen[j] = true;
    }
    CHECK(greedy_knapsack(m.objective, m.rows[0].coeffs, m.rows[0].rhs, upper) == optimum);
}

void check_duality(LpModel const& m, LpSolution<Rational> const& sol)
{
    std::size_t n = m.variables.size();
    Rational dual_objective = 0;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        CHECK(sol.duals[i] >= 0);
        CHECK(sol.slack[i] >= 0);
        CHECK(sol.duals[i] * sol.slack[i] == 0);
        dual_objective += sol.duals[i] * m.rows[i].rhs;
    }
    CHECK(dual_objective == sol.value);
    for (std::size_t j = 0; j < n; ++j) {
        Rational reduced = -m.objective[j];
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            reduced += sol.duals[i] * m.rows[i].coeffs[j];
        CHECK(reduced >= 0);
        CHECK(reduced * sol.x[j] == 0);
    }
}

LpSolution<Rational> solve_model(LpModel const& m)
{
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (auto const& row : m.rows) {
        A.push_back(row.coeffs);
        b.push_back(row.rhs);
    }
    return simplex_maximize(m.objective, A, b);
}

}  // namespace

TEST_CASE("phi index and vector")
{
    CHECK(PhiIndex::prime_power(9).to_string() == "9");
    CHECK(PhiIndex::real().to_string() == "R");
    CHECK(PhiIndex::complex().to_string() == "C");
    CHECK_THROWS_AS(PhiIndex::prime_power(12), Error);
    CHECK_THROWS_AS(PhiIndex::prime_power(1), Error);

    PhiVector v;
    CHECK_THROWS_AS(v.set(PhiIndex::real(), Real(-1)), Error);
    v.set(PhiIndex::prime_power(7), Real(1));
    v.set(PhiIndex::prime_power(7), Real(0));
    CHECK(v.entries().empty());
    CHECK(v.get(PhiIndex::prime_power(7)) == 0);
}

TEST_CASE("BS ratio")
{
    CHECK(bs_ratio(PhiVector{}) == 1);

    PhiVector c;
    c.set(PhiIndex::complex(), Real("0.236695"));
    CHECK(near(bs_ratio(c), "0.56498", "1e-5"));

    PhiVector r;
    r.set(PhiIndex::real(), Real(1));
    CHECK(bs_ratio(r) == 1 - log(Real(2)));

    PhiVector opt;
    opt.set(PhiIndex::complex(), Real("0.22686323539778627"));
    for (auto q : {7, 9, 13})
        opt.set(PhiIndex::prime_power(q), Real("0.0394492255"));
    opt.set(PhiIndex::prime_power(19), Real("0.0100238502"));
    CHECK(near(bs_ratio(opt), "0.59748", "1e-4"));
    CHECK(near(basic_inequality_lhs(opt), "1", "1e-8"));

    PhiVector lo;
    lo.set(PhiIndex::complex(), Real("0.22687"));
    CHECK(near(basic_inequality_lhs(lo), "0.86246", "1e-4"));
}

TEST_CASE("inequality coefficients")
{
    auto g = InequalityCoefficients::grh();
    CHECK(g.name == "GRH");
    CHECK(near(g.c_real, "2.68609", "1e-5"));
    CHECK(near(g.c_complex, "3.80139", "1e-5"));
    CHECK(g.q_coefficient(4) == log(Real(4)));

    auto p = InequalityCoefficients::parse("# custom\nname = test\nq_exponent = 1\nc_real = grh\nc_complex = 2.5\n");
    CHECK(p.name == "test");
    CHECK(p.q_exponent == 1);
    CHECK(p.c_real == g.c_real);
    CHECK(p.c_complex == Real("2.5"));
    CHECK(p.q_coefficient(3) == log(Real(3)) / 2);

    CHECK_THROWS_AS(InequalityCoefficients::parse("colour = red"), Error);
    CHECK_THROWS_AS(InequalityCoefficients::parse("c_real"), Error);
}

TEST_CASE("simplex agrees with vertex enumeration")
{
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<int> coeff(-3, 9), rhs(0, 12), obj(-2, 7), dim(1, 4);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = dim(rng), m = dim(rng);
        std::vector<Rational> c(n), b(m);
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
        for (auto& v : c)
            v = obj(rng);
        for (std::size_t i = 0; i < m; ++i) {
            b[i] = frac(rhs(rng), 1 + rng() % 3);
            for (auto& v : A[i])
                v = coeff(rng);
        }
        // bounded feasible region so the oracle is comparable
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> row(n, Rational(0));
            row[j] = 1;
            A.push_back(row);
            b.push_back(rhs(rng));
        }
        auto sol = simplex_maximize(c, A, b);
        CHECK(sol.value == vertex_enumeration_max(c, A, b));
        Real approx = simplex_maximize<Real>(
                          [&] {
                              std::vector<Real> v;
                              for (auto const& x : c)
                                  v.push_back(to_real(x));
                              return v;
                          }(),
                          [&] {
                              std::vector<std::vector<Real>> M;
                              for (auto const& r : A) {
                                  M.emplace_back();
                                  for (auto const& x : r)
                                      M.back().push_back(to_real(x));
                              }
                              return M;
                          }(),
                          [&] {
                              std::vector<Real> v;
                              for (auto const& x : b)
                                  v.push_back(to_real(x));
                              return v;
                          }(),
                          Real("1e-60"))
                          .value;
        CHECK(abs(approx - to_real(sol.value)) < Real("1e-9"));
        ++solved;
    }
    CHECK(solved == 300);

    CHECK_THROWS_AS(simplex_maximize<Rational>({1}, {{-1}}, {1}), Error);
    CHECK_THROWS_AS(simplex_maximize<Rational>({1}, {{1}}, {-1}), Error);
}

TEST_CASE("simplex agrees with greedy knapsack")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(1, 40);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 15;
        std::vector<Rational> c(n), a(n), u(n);
        std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> b(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = frac(small(rng), small(rng));
            a[j] = frac(small(rng), small(rng));
            u[j] = frac(small(rng), small(rng));
            A[0][j] = a[j];
            A[j + 1][j] = 1;
            b[j + 1] = u[j];
        }
        b[0] = frac(small(rng) * 4, small(rng));
        auto sol = simplex_maximize(c, A, b);
        CHECK(sol.value == greedy_knapsack(c, a, b[0], u));
    }
}

TEST_CASE("example 1 bounds")
{
    auto const& e = ex1();
    BsBounds const& b = e.bounds;
    CHECK(near(b.bsl, "0.5649830394", "1e-10"));
    CHECK(near(b.bsu, "0.5974804215", "1e-9"));
    CHECK(b.bsu >= b.bsu_unrounded);
    CHECK(b.bsu - b.bsu_unrounded < Real("1e-20"));
    CHECK(example_cell(b.bsl, b.bsu) == "0.5649-0.5975");

    CHECK(near(b.optimum.get(PhiIndex::prime_power(7)), "0.0394492255", "1e-10"));
    CHECK(near(b.optimum.get(PhiIndex::prime_power(9)), "0.0394492255", "1e-10"));
    CHECK(near(b.optimum.get(PhiIndex::prime_power(13)), "0.0394492255", "1e-10"));
    CHECK(near(b.optimum.get(PhiIndex::prime_power(19)), "0.0100238502", "1e-10"));
    CHECK(b.optimum.get(PhiIndex::prime_power(23)) == 0);
    CHECK(abs(bs_ratio(b.optimum) - b.bsu) < Real("1e-40"));
    CHECK(near(basic_inequality_lhs(b.optimum), "1", "1e-40"));
    CHECK(std::find(b.binding.begin(), b.binding.end(), "basic inequality (GRH)") != b.binding.end());

    CHECK(b.exclusion.holds);
    CHECK(b.exclusion.worst_q == 101);
    CHECK(b.exclusion.max_ratio < b.exclusion.dual_price);

    auto sol = solve_model(b.model);
    check_duality(b.model, sol);
    check_knapsack_oracle(b.model, sol.value);
    CHECK(b.model.variables.size() == e.tally.counts.size());
}

TEST_CASE("example 2 bounds")
{
    auto const& e = ex2();
    BsBounds const& b = e.bounds;
    CHECK(near(b.bsl, "0.7914476686", "1e-10"));
    CHECK(near(b.bsu, "0.827631464", "1e-9"));
    CHECK(b.bsu >= b.bsu_unrounded);
    CHECK(b.bsu - b.bsu_unrounded < Real("1e-20"));
    CHECK(example_cell(b.bsl, b.bsu) == "0.7914-0.8277");
    CHECK(b.exclusion.holds);

    auto sol = solve_model(b.model);
    check_duality(b.model, sol);
    check_knapsack_oracle(b.model, sol.value);

    // A set T of norm 13 instead of the two places of norm 71.
    auto phi13 = phi_intervals(genus_ratio_limit(e.genus, 12, {Integer(13)}), ExtensionKind::totally_real);
    CHECK(near(lp_upper_bound(e.tally, phi13, e.genus).bsu, "0.8120941", "1e-7"));
}

TEST_CASE("LP bound edge cases")
{
    PlaceTally empty;
    empty.bound = 100;
    auto pt = complex_point("0.23");
    BsBounds b = lp_upper_bound(empty, pt, Real(20));
    CHECK(b.bsu >= b.bsl);
    CHECK(b.bsu - b.bsl < Real("1e-55"));
    CHECK(b.model.variables.empty());

    PlaceTally t;
    t.bound = 30;
    t.counts = {{7, 1}, {13, 2}};
    PlaceTally more = t;
    more.counts[29] = 2;
    more.counts[7] = 3;
    Real lo = lp_upper_bound(t, pt, Real(20)).bsu;
    Real hi = lp_upper_bound(more, pt, Real(20)).bsu;
    CHECK(lo > b.bsu);
    CHECK(hi >= lo);

    CHECK_THROWS_AS(lp_upper_bound(t, pt, Real(0)), Error);
    std::vector<PhiInterval> bad{{Archimedean::complex, Real(2), Real(1)}};
    CHECK_THROWS_AS(lp_upper_bound(t, bad, Real(20)), Error);

    PlaceTally shared;
    shared.bound = 10;
    shared.counts = {{2, 2}, {4, 1}, {8, 1}};
    LpModel m = build_lp_model(shared, pt, Real(20));
    int prime_rows = 0;
    for (auto const& row : m.rows)
        if (row.kind == LpRow::Kind::prime_sum) {
            ++prime_rows;
            CHECK(row.coeffs == std::vector<Rational>{1, 2, 3});
        }
    CHECK(prime_rows == 1);
    auto sol = solve_model(m);
    check_duality(m, sol);
}

TEST_CASE("outward rounding of the model")
{
    LpModel const& m = ex1().bounds.model;
    CHECK(to_real(m.objective_constant) >= m.objective_constant_real);
    for (std::size_t j = 0; j < m.variables.size(); ++j)
        CHECK(to_real(m.objective[j]) >= m.objective_real[j]);
    for (auto const& row : m.rows) {
        CHECK(to_real(row.rhs) >= row.rhs_real);
        CHECK(to_real(row.rhs) - row.rhs_real < Real("1e-59"));
        for (std::size_t j = 0; j < row.coeffs.size(); ++j)
            CHECK(to_real(row.coeffs[j]) <= row.coeffs_real[j]);
    }
}

TEST_CASE("residue bounds")
{
    CHECK(near(kappa_upper_bound(2, Integer(5)), "2.1874", "1e-4"));
    CHECK(kappa_upper_bound(3, Integer(100)) > kappa_upper_bound(3, Integer(50)));
    CHECK_THROWS_AS(kappa_upper_bound(1, Integer(5)), Error);
    CHECK_THROWS_AS(kappa_upper_bound(2, Integer(2)), Error);

    CHECK(residue_from_invariants({1, 0, 1, 1, 2, 1}) == 1);

    double leibniz = 0;
    for (int k = 0; k < 2000000; ++k)
        leibniz += (k % 2 ? -1.0 : 1.0) / (2 * k + 1);
    Real gaussian = residue_from_invariants({0, 1, 1, 1, 4, 4});
    CHECK(abs(gaussian - Real(leibniz)) < Real("1e-6"));

    KappaInvariants q5{2, 0, 1, log((1 + sqrt(Real(5))) / 2), 2, 5};
    KappaInvariants doubled = q5;
    doubled.h = 2;
    CHECK(abs(residue_from_invariants(doubled) - 2 * residue_from_invariants(q5)) < Real("1e-50"));
    CHECK(residue_from_invariants(q5) < kappa_upper_bound(2, Integer(5)));

    CHECK_THROWS_AS(residue_from_invariants({0, 0, 1, 1, 2, 1}), Error);
}

TEST_CASE("summary table")
{
    std::vector<TowerBounds> towers{
        {"example 1", ExtensionKind::totally_complex, ex1().bounds.bsl, ex1().bounds.bsu},
        {"example 2", ExtensionKind::totally_real, ex2().bounds.bsl, ex2().bounds.bsu},
    };
    SummaryTable t = emit_table(towers);
    REQUIRE(t.rows.size() == 6);
    CHECK(t.rows[0].condition == "GRH");
    CHECK(t.rows[0].family == "all fields");
    CHECK(t.rows[0].lower_example.text == "0.5649-0.5975");
    CHECK(t.rows[0].lower_example.computed);
    CHECK(t.rows[1].lower_example.text == "0.7914-0.8277");
    CHECK(t.rows[2].lower_example.text == "0.5649-0.5975");
    CHECK_FALSE(t.rows[0].lower_bound.computed);
    CHECK(t.rows[0].lower_bound.text == "0.5165");
    CHECK_FALSE(t.rows[3].lower_example.computed);

    std::string text = render_text(t);
    CHECK(text.find("0.5649-0.5975") != std::string::npos);
    CHECK(text.find("0.5165*") != std::string::npos);
    CHECK(text.find("not re-derived") != std::string::npos);

    CHECK(emit_table({}).rows.empty());

    auto only_real = emit_table({towers[1]});
    CHECK(only_real.rows[0].lower_example.text == "0.7914-0.8277");
    CHECK(only_real.rows[2].lower_example.text == "n/a");

    auto cfg = TableConfig::parse("row = X | totally real | computed | 1 | 2 | 3  # note\n");
    auto custom = emit_table(towers, cfg);
    REQUIRE(custom.rows.size() == 1);
    CHECK(custom.rows[0].lower_bound.text == "0.7914-0.8277");
    CHECK_THROWS_AS(TableConfig::parse("row = a | b | c"), Error);
    CHECK_THROWS_AS(TableConfig::parse("row = a | odd | 1 | 2 | 3 | 4"), Error);
    CHECK_THROWS_AS(TableConfig::parse("col = a | all fields | 1 | 2 | 3 | 4"), Error);

    CHECK(example_cell(Real("0.50001"), Real("0.50001")) == "0.5000-0.5001");
    CHECK(example_cell(Real("0.5"), Real("0.5")) == "0.5000-0.5000");
}
