#ifndef BSTOWER_ARITH_NUMERIC_HPP_
#define BSTOWER_ARITH_NUMERIC_HPP_

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace bstower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Working real type: 100 significant decimal digits (MPFR).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                           boost::multiprecision::et_off>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Rounding { down, up };

Real to_real(Integer const& z);
Real to_real(Rational const& q);

/// The exact binary value carried by an MPFR number.
Rational exact_rational(Real const& x);

/// Rational approximation of x with `digits` significant decimal digits,
/// rounded in the requested direction. The working-precision error of x is
/// absorbed by a guard margin, so the result bounds the true value.
Rational round_to_rational(Real const& x, Rounding dir, int digits = 60);

Real real_pi();
Real euler_gamma();
Real real_log(Integer const& z);

/// Decimal rendering with a fixed number of digits after the point.
std::string format_fixed(Real const& x, int decimals);
std::string format_fixed(Rational const& x, int decimals);

inline int sign(Integer const& z) { return sgn(z); }
inline int sign(Rational const& q) { return sgn(q); }

}  // namespace bstower

#endif  // BSTOWER_ARITH_NUMERIC_HPP_
