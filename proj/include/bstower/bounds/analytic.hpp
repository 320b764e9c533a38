#ifndef BSTOWER_BOUNDS_ANALYTIC_HPP_
#define BSTOWER_BOUNDS_ANALYTIC_HPP_

#include "bstower/arith/numeric.hpp"

namespace bstower {

struct KappaInvariants {
    int r1 = 0;
    int r2 = 0;
    Integer h = 1;   // class number
    Real R = 1;      // regulator
    Integer w = 2;   // roots of unity
    Integer D = 1;   // |discriminant|
};

/// (e log D / (2(n-1)))^(n-1), an upper bound for the residue of zeta_K at 1.
Real kappa_upper_bound(int n, Integer const& D);

/// 2^r1 (2 pi)^r2 h R / (w sqrt D)
Real residue_from_invariants(KappaInvariants const& k);

}  // namespace bstower

#endif  // BSTOWER_BOUNDS_ANALYTIC_HPP_
