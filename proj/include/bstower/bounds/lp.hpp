#ifndef BSTOWER_BOUNDS_LP_HPP_
#define BSTOWER_BOUNDS_LP_HPP_

#include "bstower/bounds/phi.hpp"
#include "bstower/bounds/simplex.hpp"
#include "bstower/field/quadratic_extension.hpp"
#include "bstower/tower/certificate.hpp"

namespace bstower {

/// One constraint sum_j coeffs[j] x_j <= rhs, exact and unrounded.
struct LpRow {
    enum class Kind { basic_inequality, prime_sum, cap };
    Kind kind = Kind::cap;
    std::string label;
    std::vector<Rational> coeffs;
    Rational rhs;
    std::vector<Real> coeffs_real;
    Real rhs_real;
};

/// Upper-bound program over phi_q for the prime powers q in the tally:
///   maximize constant + sum_q phi_q log(q/(q-1))
///   basic inequality with the archimedean term at the lower phi endpoint,
///   sum_m m phi_{p^m} <= phi_R,hi + 2 phi_C,hi for every p,
///   phi_q <= N_q / g_K.
/// Exact entries are 60-digit rationals rounded so that the optimum can only grow.
struct LpModel {
    std::uint64_t support_bound = 0;   // tally bound Q
    std::vector<std::uint64_t> variables;
    std::vector<Rational> objective;
    Rational objective_constant;
    std::vector<LpRow> rows;
    std::vector<Real> objective_real;
    Real objective_constant_real;
    int digits = 60;
};

LpModel build_lp_model(PlaceTally const& tally, std::vector<PhiInterval> const& phi, Real const& g_K,
                       InequalityCoefficients const& coeffs = InequalityCoefficients::grh(), int digits = 60);

/// No prime power beyond the tally bound can improve the optimum: explicit
/// reduced costs up to `checked_up_to`, then the bound
/// q^s/((q-1) log q) >= log(q/(q-1)) / a_q, decreasing in q for s < 1,
/// compared against the dual price.
struct ExclusionCertificate {
    bool holds = false;
    Real dual_price;           // dual of the basic inequality
    Real max_ratio;            // max over checked q of log(q/(q-1)) / a_q
    std::uint64_t worst_q = 0;
    std::uint64_t checked_up_to = 0;
    Real tail_bound;
};

struct BsBounds {
    Real bsl;
    Real bsu;
    Rational bsu_exact;
    PhiVector optimum;
    std::vector<std::string> binding;
    LpModel model;
    ExclusionCertificate exclusion;
    Real bsu_unrounded;        // same program solved on the unrounded Real entries
};

BsBounds lp_upper_bound(PlaceTally const& tally, std::vector<PhiInterval> const& phi, Real const& g_K,
                        InequalityCoefficients const& coeffs = InequalityCoefficients::grh());

/// BS ratio with the archimedean phi at the upper endpoints and no finite places.
Real bs_lower_bound(std::vector<PhiInterval> const& phi);

ExclusionCertificate exclusion_certificate(LpModel const& model, Real const& dual_price,
                                           InequalityCoefficients const& coeffs,
                                           std::uint64_t checked_up_to = 10000);

}  // namespace bstower

#endif  // BSTOWER_BOUNDS_LP_HPP_
