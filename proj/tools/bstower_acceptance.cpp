#include "bstower/arith/integer_factor.hpp"
#include "bstower/bounds/analytic.hpp"
#include "bstower/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace bstower;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, std::string note)
    {
        pass = pass && ok;
        notes.push_back((ok ? "" : "FAILED ") + std::move(note));
    }
};

ReportStep const* find_step(Report const& r, std::string const& name)
{
    for (auto const& s : r.steps)
        if (s.name == name)
            return &s;
    return nullptr;
}

void require_step(Outcome& o, Report const& r, std::string const& name)
{
    ReportStep const* s = find_step(r, name);
    if (!s) {
        o.require(false, name + " missing");
        return;
    }
    std::string note = name + " = " + s->computed;
    if (!s->expected.empty())
        note += " (ref " + s->expected + (s->tolerance.empty() ? "" : ", tol " + s->tolerance) + ")";
    o.require(s->pass, note);
}

Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M, std::vector<Rational> r)
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

/// max c.x over {A x <= b, x >= 0} by enumerating basic solutions.
Rational vertex_max(std::vector<Rational> const& c, std::vector<std::vector<Rational>> const& A,
                    std::vector<Rational> const& b)
{
    std::size_t n = c.size(), m = A.size();
    auto rows = A;
    auto rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = -1;
        rows.push_back(e);
        rhs.push_back(0);
    }
    std::optional<Rational> best;
    std::vector<bool> pick(m + n, false);
    std::fill(pick.end() - static_cast<long>(n), pick.end(), true);
    do {
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> r;
        for (std::size_t i = 0; i < m + n; ++i)
            if (pick[i]) {
                M.push_back(rows[i]);
                r.push_back(rhs[i]);
            }
        auto x = solve_square(M, r);
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
    return best.value_or(Rational(0));
}

/// Vertices of {a.x <= B, 0 <= x <= u} have every coordinate at 0 or u except
/// at most one; enumerate them all.
long double knapsack_vertex_max(std::vector<long double> const& c, std::vector<long double> const& a, long double B,
                                std::vector<long double> const& u)
{
    std::size_t n = c.size();
    long double best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        long double used = 0, value = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) {
                used += a[j] * u[j];
                value += c[j] * u[j];
            }
        if (used > B * (1 + 1e-15L))
            continue;
        best = std::max(best, value);
        for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1)
                continue;
            long double t = std::min(u[j], (B - used) / a[j]);
            if (t > 0)
                best = std::max(best, value + c[j] * t);
        }
    }
    return best;
}

Real simplex_value(LpModel const& m)
{
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (auto const& row : m.rows) {
        A.push_back(row.coeffs);
        b.push_back(row.rhs);
    }
    return to_real(simplex_maximize(m.objective, A, b).value);
}

/// The example models: every per-p row has one variable, so the program is a
/// knapsack over the basic inequality.
long double model_knapsack_oracle(LpModel const& m)
{
    std::size_t n = m.variables.size();
    std::vector<long double> c, a, u(n, 1e300L);
    for (std::size_t j = 0; j < n; ++j) {
        c.push_back(static_cast<long double>(to_real(m.objective[j])));
        a.push_back(static_cast<long double>(to_real(m.rows[0].coeffs[j])));
    }
    for (auto const& row : m.rows) {
        if (row.kind == LpRow::Kind::basic_inequality)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (row.coeffs[j] != 0)
                u[j] = std::min(u[j], static_cast<long double>(to_real(row.rhs / row.coeffs[j])));
    }
    return knapsack_vertex_max(c, a, static_cast<long double>(to_real(m.rows[0].rhs)), u);
}

Outcome property_suites()
{
    Outcome o;
    std::mt19937_64 rng(20240611);

    auto doc1 = InputDocument::parse(bundled_example(1));
    auto doc2 = InputDocument::parse(bundled_example(2));
    int bad_norms = 0;
    for (auto const* doc : {&doc1, &doc2}) {
        FieldOrder k(doc->poly);
        std::uniform_int_distribution<long> d(-50, 50);
        for (int i = 0; i < 100; ++i) {
            std::vector<long> x(6), y(6);
            do {
                for (auto& v : x)
                    v = d(rng);
                for (auto& v : y)
                    v = d(rng);
            } while (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }) ||
                     std::all_of(y.begin(), y.end(), [](long v) { return v == 0; }));
            auto a = k.from_ints(x), b = k.from_ints(y);
            if (k.norm(k.mul(a, b)) != k.norm(a) * k.norm(b))
                ++bad_norms;
        }
    }
    o.require(bad_norms == 0, "norm multiplicativity on 2 x 100 random pairs");

    int bad_degrees = 0;
    for (auto const* doc : {&doc1, &doc2}) {
        FieldOrder k(doc->poly);
        QuadraticExtension K(k, doc->eta_unit == -1 ? k.neg(k.element(doc->eta)) : k.element(doc->eta));
        PlaceTally t = place_tally(K, 100);
        for (std::uint64_t p : primes_up_to(100))
            if (t.local_degree_sum(p) != 12)
                ++bad_degrees;
    }
    o.require(bad_degrees == 0, "sum e*f = 12 above every p <= 100 in both fields");

    Real worst = 0;
    std::uniform_int_distribution<int> coeff(-3, 9), rhs(0, 12), obj(-2, 7), dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = static_cast<std::size_t>(dim(rng)), m = static_cast<std::size_t>(dim(rng));
        std::vector<Rational> c(n), b;
        std::vector<std::vector<Rational>> A;
        for (auto& v : c)
            v = obj(rng);
        for (std::size_t i = 0; i < m; ++i) {
            A.emplace_back(n);
            for (auto& v : A.back())
                v = coeff(rng);
            b.push_back(frac(rhs(rng), 1 + static_cast<long>(rng() % 3)));
        }
        for (std::size_t j = 0; j < n; ++j) {
            A.emplace_back(n, Rational(0));
            A.back()[j] = 1;
            b.push_back(rhs(rng));
        }
        Real diff = abs(to_real(simplex_maximize(c, A, b).value) - to_real(vertex_max(c, A, b)));
        worst = std::max(worst, diff);
    }
    for (int trial = 0; trial < 4; ++trial) {
        std::size_t n = 15;
        std::vector<Rational> c(n), a(n), u(n);
        std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> b(n + 1);
        std::vector<long double> cl(n), al(n), ul(n);
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = frac(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 40));
            a[j] = frac(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 40));
            u[j] = frac(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 40));
            A[0][j] = a[j];
            A[j + 1][j] = 1;
            b[j + 1] = u[j];
            cl[j] = static_cast<long double>(c[j].get_d());
            al[j] = static_cast<long double>(a[j].get_d());
            ul[j] = static_cast<long double>(u[j].get_d());
        }
        b[0] = frac(1 + static_cast<long>(rng() % 160), 1 + static_cast<long>(rng() % 40));
        long double oracle = knapsack_vertex_max(cl, al, static_cast<long double>(b[0].get_d()), ul);
        Real diff = abs(to_real(simplex_maximize(c, A, b).value) - Real(static_cast<double>(oracle)));
        worst = std::max(worst, diff);
    }
    for (auto const* doc : {&doc1, &doc2}) {
        FieldOrder k(doc->poly);
        QuadraticExtension K(k, doc->eta_unit == -1 ? k.neg(k.element(doc->eta)) : k.element(doc->eta));
        auto phi = phi_intervals(genus_ratio_limit(K.genus(), 12, {}), K.signature().kind);
        LpModel m = build_lp_model(place_tally(K, 100), phi, K.genus());
        Real diff = abs(simplex_value(m) - Real(static_cast<double>(model_knapsack_oracle(m))));
        worst = std::max(worst, diff);
    }
    o.require(worst <= Real("1e-9"), "simplex vs vertex enumeration, max |diff| = " +
                                         worst.str(3, std::ios_base::scientific) + " (tol 1e-9)");

    o.require(bs_ratio(PhiVector{}) == 1, "bs_ratio(0) = 1 exactly");
    o.require(residue_from_invariants({1, 0, 1, 1, 2, 1}) == 1, "residue for Q = 1");
    double leibniz = 0;
    for (int j = 0; j < 2000000; ++j)
        leibniz += (j % 2 ? -1.0 : 1.0) / (2 * j + 1);
    Real gaussian = residue_from_invariants({0, 1, 1, 1, 4, 4});
    Real gap = abs(gaussian - Real(leibniz));
    o.require(gap <= Real("1e-6"), "Gaussian residue vs alternating series, |diff| = " +
                                       gap.str(3, std::ios_base::scientific) + " (tol 1e-6)");
    return o;
}

std::set<int> parse_list(std::string const& text)
{
    std::set<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.insert(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria for the worked examples"};
    std::string known_red;
    bool verbose = false;
    app.add_option("--known-red", known_red,
                   "Comma-separated criteria expected to fail; exit 0 iff exactly these fail");
    app.add_flag("--verbose", verbose, "Print the checks behind each criterion");
    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    std::set<int> expected_red;
    try {
        expected_red = parse_list(known_red);
    } catch (std::exception const&) {
        std::cerr << "error: --known-red expects a list such as 9,11\n";
        return 2;
    }

    std::vector<std::pair<std::string, Outcome>> results;
    auto t0 = std::chrono::steady_clock::now();
    FieldOrder k1(InputDocument::parse(bundled_example(1)).poly);
    double disc_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    Report v1 = cmd_verify(1);
    Report v2 = cmd_verify(2);

    {
        Outcome o;
        require_step(o, v1, "discriminant");
        o.require(k1.poly_discriminant() == -23 * 35509, "disc(f) = -23*35509");
        o.require(disc_seconds < 1.0, "computed in " + std::to_string(disc_seconds) + " s (limit 1 s)");
        results.emplace_back("discriminant of f1", o);
    }
    {
        Outcome o;
        require_step(o, v1, "signature");
        results.emplace_back("signature of f1 is (4,1)", o);
    }
    {
        Outcome o;
        require_step(o, v1, "eta norm");
        require_step(o, v1, "prime certification");
        require_step(o, v1, "product identity");
        results.emplace_back("norm of eta1, prime factors and product identity", o);
    }
    {
        Outcome o;
        require_step(o, v1, "square witness");
        require_step(o, v1, "augmentation");
        ReportStep const* aug = find_step(v1, "augmentation");
        o.require(aug && aug->detail.find("square witness: ok (supplied witness checked)") != std::string::npos,
                  "pi_3 pi_19 = rho^2 + 4 sigma with the supplied rho, sigma");
        require_step(o, v1, "augmentation product");
        results.emplace_back("square witnesses and pi_3 pi_19", o);
    }
    {
        Outcome o;
        require_step(o, v1, "absolute discriminant");
        require_step(o, v1, "genus");
        results.emplace_back("absolute discriminant and genus of K1", o);
    }
    {
        Outcome o;
        require_step(o, v1, "ramification");
        ReportStep const* ram = find_step(v1, "ramification");
        o.require(ram && ram->detail.find("= 8-4-1+4-1") != std::string::npos, "d(G_empty) >= 8-4-1+4-1");
        require_step(o, v1, "GS threshold (theta=0)");
        require_step(o, v1, "augmentation");
        require_step(o, v1, "d(G_T)");
        require_step(o, v1, "GS certificate (theta=0)");
        ReportStep const* theta1 = find_step(v1, "GS certificate (theta=1)");
        o.require(theta1 != nullptr, "theta=1 variant reported: " + (theta1 ? theta1->computed + ", " + theta1->detail : ""));
        results.emplace_back("Golod-Shafarevich pipeline for K1", o);
    }
    {
        Outcome o;
        require_step(o, v1, "phi_C lower endpoint");
        require_step(o, v1, "phi_C upper endpoint");
        results.emplace_back("phi_C interval endpoints", o);
    }
    {
        Outcome o;
        require_step(o, v1, "BS lower bound");
        require_step(o, v1, "BS upper bound");
        for (int q : {7, 9, 13, 19})
            require_step(o, v1, "LP optimum phi_" + std::to_string(q));
        bool silent = !find_step(v1, "BS upper bound")->pass && v1.deviations.empty();
        o.require(!silent, "a BSU miss carries a deviation report");
        results.emplace_back("BSL1, BSU1 and the LP optimum", o);
    }
    {
        Outcome o;
        require_step(o, v2, "GS certificate (theta=0)");
        require_step(o, v2, "BS lower bound");
        require_step(o, v2, "BS upper bound");
        for (auto const& d : v2.deviations)
            o.notes.push_back("deviation at " + d.step + ": " + d.computed + " vs " + d.expected + " (delta " +
                              d.delta + "); " + d.analysis);
        results.emplace_back("example 2 verdict, BSL2 and BSU2", o);
    }
    results.emplace_back("property suites", property_suites());
    {
        Outcome o;
        Report t = cmd_table();
        auto cell_in_row = [&](std::string const& family, std::string const& cell) {
            for (auto const& line : t.output)
                if (line.rfind("GRH", 0) == 0 && line.find(family) != std::string::npos)
                    return std::pair<bool, std::string>{line.find(cell + " ") != std::string::npos, line};
            return std::pair<bool, std::string>{false, "row missing"};
        };
        auto [all_ok, all_line] = cell_in_row("all fields", "0.5649-0.5975");
        o.require(all_ok, "GRH all fields lower example 0.5649-0.5975: " + all_line);
        auto [real_ok, real_line] = cell_in_row("totally real", "0.7914-0.8121");
        o.require(real_ok, "GRH totally real lower example 0.7914-0.8121: " + real_line);
        o.require(!t.output.empty() && t.output.back() == "* literal from configuration, not re-derived",
                  "literal cells marked not re-derived");
        results.emplace_back("summary table example cells", o);
    }

    std::set<int> red;
    for (std::size_t i = 0; i < results.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        auto const& [title, o] = results[i];
        std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << '\n';
        if (verbose || !o.pass)
            for (auto const& note : o.notes)
                std::cout << "    " << note << '\n';
        if (!o.pass)
            red.insert(n);
    }
    std::cout << "summary: " << results.size() - red.size() << " of " << results.size() << " criteria pass";
    if (!red.empty()) {
        std::cout << "; failing:";
        for (int n : red)
            std::cout << ' ' << n;
    }
    std::cout << '\n';
    if (known_red.empty())
        return red.empty() ? 0 : 1;
    if (red != expected_red) {
        std::cout << "failing set differs from --known-red " << known_red << '\n';
        return 1;
    }
    return 0;
}
