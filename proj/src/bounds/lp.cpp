#include "bstower/bounds/lp.hpp"

#include "bstower/arith/integer_factor.hpp"

namespace bstower {

namespace {

struct ArchimedeanRange {
    Real real_lo = 0, real_hi = 0, complex_lo = 0, complex_hi = 0;
};

ArchimedeanRange archimedean(std::vector<PhiInterval> const& phi)
{
    ArchimedeanRange r;
    for (auto const& iv : phi) {
        if (iv.lo < 0 || iv.hi < iv.lo)
            throw Error("phi interval must satisfy 0 <= lo <= hi");
        if (iv.alpha == Archimedean::real) {
            r.real_lo = iv.lo;
            r.real_hi = iv.hi;
        } else {
            r.complex_lo = iv.lo;
            r.complex_hi = iv.hi;
        }
    }
    return r;
}

LpRow make_row(LpRow::Kind kind, std::string label, std::vector<Real> coeffs, Rounding coeff_dir, Real rhs,
               int digits)
{
    LpRow row;
    row.kind = kind;
    row.label = std::move(label);
    for (auto const& c : coeffs) {
        if (c == 0 || c == floor(c))
            row.coeffs.push_back(exact_rational(c));
        else
            row.coeffs.push_back(round_to_rational(c, coeff_dir, digits));
    }
    row.coeffs_real = std::move(coeffs);
    row.rhs = round_to_rational(rhs, Rounding::up, digits);
    row.rhs_real = rhs;
    return row;
}

}  // namespace

LpModel build_lp_model(PlaceTally const& tally, std::vector<PhiInterval> const& phi, Real const& g_K,
                       InequalityCoefficients const& coeffs, int digits)
{
    if (g_K <= 0)
        throw Error("genus must be positive");
    ArchimedeanRange a = archimedean(phi);
    LpModel m;
    m.digits = digits;
    m.support_bound = tally.bound;
    for (auto const& [q, count] : tally.counts)
        if (count > 0)
            m.variables.push_back(q);

    m.objective_constant_real = 1 - a.real_lo * log(Real(2)) - a.complex_lo * log(2 * real_pi());
    m.objective_constant = round_to_rational(m.objective_constant_real, Rounding::up, digits);
    for (std::uint64_t q : m.variables) {
        Real c = log(Real(q) / Real(q - 1));
        m.objective_real.push_back(c);
        m.objective.push_back(round_to_rational(c, Rounding::up, digits));
    }
    std::size_t n = m.variables.size();

    std::vector<Real> basic;
    for (std::uint64_t q : m.variables)
        basic.push_back(coeffs.q_coefficient(q));
    m.rows.push_back(make_row(LpRow::Kind::basic_inequality, "basic inequality (" + coeffs.name + ")",
                              std::move(basic), Rounding::down,
                              1 - a.real_lo * coeffs.c_real - a.complex_lo * coeffs.c_complex, digits));

    std::map<Integer, std::vector<Real>> by_prime;
    for (std::size_t j = 0; j < n; ++j) {
        auto [p, e] = prime_power(Integer(static_cast<unsigned long>(m.variables[j])));
        auto& row = by_prime[p];
        row.resize(n, Real(0));
        row[j] = e;
    }
    for (auto& [p, row] : by_prime)
        m.rows.push_back(make_row(LpRow::Kind::prime_sum, "sum m*phi(" + p.get_str() + "^m) <= phi_R + 2 phi_C",
                                  std::move(row), Rounding::down, a.real_hi + 2 * a.complex_hi, digits));

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Real> row(n, Real(0));
        row[j] = 1;
        std::uint64_t q = m.variables[j];
        m.rows.push_back(make_row(LpRow::Kind::cap, "cap phi_" + std::to_string(q) + " <= N_q/g",
                                  std::move(row), Rounding::down, Real(tally.count(q)) / g_K, digits));
    }
    return m;
}

Real bs_lower_bound(std::vector<PhiInterval> const& phi)
{
    ArchimedeanRange a = archimedean(phi);
    PhiVector v;
    v.set(PhiIndex::real(), a.real_hi);
    v.set(PhiIndex::complex(), a.complex_hi);
    return bs_ratio(v);
}

ExclusionCertificate exclusion_certificate(LpModel const& model, Real const& dual_price,
                                           InequalityCoefficients const& coeffs, std::uint64_t checked_up_to)
{
    ExclusionCertificate c;
    c.dual_price = dual_price;
    c.checked_up_to = checked_up_to;
    c.max_ratio = 0;
    std::vector<bool> is_pp(checked_up_to + 1, false);
    for (std::uint64_t p : primes_up_to(checked_up_to))
        for (std::uint64_t q = p; q <= checked_up_to; q *= p)
            is_pp[q] = true;
    for (std::uint64_t q = model.support_bound + 1; q <= checked_up_to; ++q) {
        if (!is_pp[q])
            continue;
        Real ratio = log(Real(q) / Real(q - 1)) / coeffs.q_coefficient(q);
        if (ratio > c.max_ratio) {
            c.max_ratio = ratio;
            c.worst_q = q;
        }
    }
    Real tail_q(checked_up_to + 1);
    c.tail_bound = pow(tail_q, coeffs.q_exponent) / ((tail_q - 1) * log(tail_q));
    c.holds = c.max_ratio <= dual_price && c.tail_bound <= dual_price;
    return c;
}

BsBounds lp_upper_bound(PlaceTally const& tally, std::vector<PhiInterval> const& phi, Real const& g_K,
                        InequalityCoefficients const& coeffs)
{
    BsBounds out;
    out.model = build_lp_model(tally, phi, g_K, coeffs);
    LpModel const& m = out.model;

    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<std::vector<Real>> A_real;
    std::vector<Real> b_real;
    for (auto const& row : m.rows) {
        A.push_back(row.coeffs);
        b.push_back(row.rhs);
        A_real.push_back(row.coeffs_real);
        b_real.push_back(row.rhs_real);
    }
    auto sol = simplex_maximize(m.objective, A, b);
    out.bsu_exact = m.objective_constant + sol.value;
    out.bsu = to_real(out.bsu_exact);

    auto audit = simplex_maximize(m.objective_real, A_real, b_real, Real("1e-80"));
    out.bsu_unrounded = m.objective_constant_real + audit.value;

    ArchimedeanRange a = archimedean(phi);
    out.optimum.set(PhiIndex::real(), a.real_lo);
    out.optimum.set(PhiIndex::complex(), a.complex_lo);
    for (std::size_t j = 0; j < m.variables.size(); ++j)
        out.optimum.set(PhiIndex::prime_power(m.variables[j]), to_real(sol.x[j]));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        if (sol.slack[i] == 0)
            out.binding.push_back(m.rows[i].label);

    out.bsl = bs_lower_bound(phi);
    out.exclusion = exclusion_certificate(m, to_real(sol.duals[0]), coeffs);
    return out;
}

}  // namespace bstower
