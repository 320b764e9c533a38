#include "bstower/bounds/analytic.hpp"

namespace bstower {

Real kappa_upper_bound(int n, Integer const& D)
{
    if (n < 2)
        throw Error("kappa bound needs degree n >= 2");
    if (D < 3)
        throw Error("kappa bound needs discriminant D >= 3");
    Real base = exp(Real(1)) * real_log(D) / (2 * (n - 1));
    return pow(base, n - 1);
}

Real residue_from_invariants(KappaInvariants const& k)
{
    if (k.r1 < 0 || k.r2 < 0 || k.r1 + k.r2 == 0)
        throw Error("signature must be nonnegative with r1 + r2 > 0");
    if (k.h <= 0 || k.R <= 0 || k.w <= 0 || k.D <= 0)
        throw Error("class number, regulator, roots of unity and discriminant must be positive");
    Real r = pow(Real(2), k.r1) * pow(2 * real_pi(), k.r2) * to_real(k.h) * k.R;
    return r / (to_real(k.w) * sqrt(to_real(k.D)));
}

}  // namespace bstower
