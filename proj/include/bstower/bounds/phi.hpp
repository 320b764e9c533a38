#ifndef BSTOWER_BOUNDS_PHI_HPP_
#define BSTOWER_BOUNDS_PHI_HPP_

#include "bstower/arith/numeric.hpp"

#include <cstdint>
#include <map>
#include <string_view>

namespace bstower {

/// Index set {R, C} plus prime powers q.
struct PhiIndex {
    enum class Kind { real, complex, prime_power };
    Kind kind = Kind::prime_power;
    std::uint64_t q = 0;

    static PhiIndex real() { return {Kind::real, 0}; }
    static PhiIndex complex() { return {Kind::complex, 0}; }
    static PhiIndex prime_power(std::uint64_t q);

    std::string to_string() const;
    friend auto operator<=>(PhiIndex const&, PhiIndex const&) = default;
};

/// Sparse nonnegative assignment alpha -> phi_alpha.
class PhiVector {
public:
    void set(PhiIndex const& a, Real const& v);
    Real get(PhiIndex const& a) const;
    std::map<PhiIndex, Real> const& entries() const { return values_; }

private:
    std::map<PhiIndex, Real> values_;
};

/// 1 + sum_q phi_q log(q/(q-1)) - phi_R log 2 - phi_C log(2 pi)
Real bs_ratio(PhiVector const& phi);

/// Coefficients of a basic inequality
///   sum_q phi_q log q / (q^s - 1) + c_R phi_R + c_C phi_C <= 1.
struct InequalityCoefficients {
    std::string name = "GRH";
    Real q_exponent = Real(1) / 2;
    Real c_real;
    Real c_complex;

    Real q_coefficient(std::uint64_t q) const;

    /// s = 1/2, c_R = log(2 sqrt(2 pi)) + pi/4 + gamma/2, c_C = log(8 pi) + gamma.
    static InequalityCoefficients grh();

    /// key = value lines with keys name, q_exponent, c_real, c_complex; a value
    /// of "grh" selects the GRH constant. Unset keys keep the GRH values.
    static InequalityCoefficients parse(std::string_view text);
};

Real basic_inequality_lhs(PhiVector const& phi, InequalityCoefficients const& c = InequalityCoefficients::grh());

}  // namespace bstower

#endif  // BSTOWER_BOUNDS_PHI_HPP_
