#ifndef BSTOWER_ARITH_REAL_ROOTS_HPP_
#define BSTOWER_ARITH_REAL_ROOTS_HPP_

#include "bstower/arith/int_poly.hpp"

#include <vector>

namespace bstower {

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
public:
    explicit SturmSequence(IntPoly const& a);

    /// Number of distinct real roots in the half-open interval (lo, hi].
    int count_in(Rational const& lo, Rational const& hi) const;
    int count_total() const;

private:
    int variations_at(Rational const& x) const;
    int variations_at_infinity(bool positive) const;
    std::vector<IntPoly> seq_;
};

/// Exact count of distinct real roots; rejects non-squarefree input.
int sturm_real_root_count(IntPoly const& a);

/// An isolating interval: exactly one root in (lo, hi], or lo == hi for an exact rational root.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

/// Disjoint isolating intervals for every real root, in increasing order.
std::vector<RootInterval> isolate_real_roots(IntPoly const& a);

/// Halves the interval around the root of a (which must be squarefree).
RootInterval refine_root(IntPoly const& a, RootInterval const& iv);

/// Sign of p at the unique root of a inside iv. Zero is decided exactly through
/// gcd(a, p); otherwise the interval is refined until evaluation of p excludes zero. Throws once the width falls below 2^-max_bits.
int sign_at_root(IntPoly const& a, RootInterval iv, IntPoly const& p, int max_bits = 256);

struct RationalInterval {
    Rational lo;
    Rational hi;
};

/// Interval Horner evaluation of p over [lo, hi].
RationalInterval eval_interval(IntPoly const& p, Rational const& lo, Rational const& hi);

}  // namespace bstower

#endif  // BSTOWER_ARITH_REAL_ROOTS_HPP_
