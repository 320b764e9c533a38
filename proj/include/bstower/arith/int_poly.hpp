#ifndef BSTOWER_ARITH_INT_POLY_HPP_
#define BSTOWER_ARITH_INT_POLY_HPP_

#include "bstower/arith/numeric.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bstower {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(Integer c);
    static IntPoly monomial(Integer c, int degree);

    /// Parses expressions like "x^6 + x^4 - 4*x^3 - 7x^2 - x + 1".
    static IntPoly parse(std::string_view text, char var = 'x');

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer const& leading() const;
    Integer coeff(int i) const;
    std::vector<Integer> const& coeffs() const { return coeffs_; }

    Integer content() const;
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    IntPoly operator-() const;

    Integer eval(Integer const& x) const;
    Rational eval(Rational const& x) const;

    /// Exact division of every coefficient; throws if some coefficient is not divisible.
    IntPoly divided_by(Integer const& d) const;

    std::string to_string(char var = 'x') const;

    friend IntPoly operator+(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator-(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator*(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator*(Integer const& c, IntPoly const& a);
    friend bool operator==(IntPoly const& a, IntPoly const& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b);

/// Primitive gcd over Z[x] with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(IntPoly const& a, IntPoly const& b);

/// Res(a, b), equal to the determinant of the Sylvester matrix (subresultant PRS).
Integer resultant(IntPoly const& a, IntPoly const& b);

/// (-1)^(n(n-1)/2) Res(a, a') / lc(a).
Integer discriminant(IntPoly const& a);

}  // namespace bstower

#endif  // BSTOWER_ARITH_INT_POLY_HPP_
