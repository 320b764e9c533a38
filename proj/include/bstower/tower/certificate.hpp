#ifndef BSTOWER_TOWER_CERTIFICATE_HPP_
#define BSTOWER_TOWER_CERTIFICATE_HPP_

#include "bstower/field/quadratic_extension.hpp"

namespace bstower {

struct RamificationData {
    int t = 0;          // primes of k ramified in K
    int rho = 0;        // real places of k ramified in K
    int r1 = 0;
    int r2 = 0;
    int delta_ell = 0;  // 1 if k contains a primitive ell-th root of unity
    int ell = 2;
};

/// 1 for ell = 2. For odd ell, 0 when (ell - 1) does not divide [k:Q];
/// otherwise the cyclotomic test is not implemented and this throws.
int delta_ell(FieldOrder const& k, int ell);

RamificationData ramification_data(QuadraticExtension const& K, int ell = 2);

/// t - r1 - r2 + rho - delta_ell
int dgt_lower_bound(RamificationData const& r);

/// 2 + 2*sqrt(r1 + r2 + theta)
Real gs_threshold(int r1_K, int r2_K, int theta);

struct TPlace {
    std::string description;
    Integer norm;
};

struct GSCertificate {
    int d_lower = 0;
    int theta = 0;
    Real threshold;
    bool infinite = false;   // d_lower >= threshold
    std::vector<TPlace> T;
};

GSCertificate gs_certificate(int d_lower, int r1_K, int r2_K, int theta, std::vector<TPlace> T = {});

struct AugmentationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AugmentationVerdict {
    bool valid = false;
    std::vector<AugmentationCheck> checks;
    OrderElement aug;
    std::optional<SquareWitness> witness;
    std::optional<PrimeIdeal> new_prime;
    std::optional<PrimeIdeal> old_prime;
    std::optional<Splitting> new_prime_in_K;
    std::vector<TPlace> T;
    /// Real places of K at which aug is negative, so K(sqrt aug)/K ramifies there.
    int real_places_ramified = 0;
};

/// Checks that K(sqrt(p_new * p_old))/K is ramified exactly above p_new:
/// both factors are certified primes, aug = p_new * p_old has a beta^2 + 4*gamma
/// witness, p_old divides eta, p_new does not, and p_new is prime to ell.
AugmentationVerdict verify_tame_augmentation(QuadraticExtension const& K, OrderElement const& p_new,
                                             OrderElement const& p_old, int ell = 2,
                                             std::optional<SquareWitness> witness = std::nullopt);

struct GenusLimit {
    Real g_K;
    int n_K = 0;
    Real t_norm_log_sum;
    Real ratio_bound;   // g_K/n_K + t_norm_log_sum/(2 n_K)
};

GenusLimit genus_ratio_limit(Real const& g_K, int n_K, std::vector<Integer> const& t_norms);

enum class Archimedean { real, complex };

struct PhiInterval {
    Archimedean alpha = Archimedean::complex;
    Real lo;
    Real hi;
};

/// Archimedean phi ranges for a tower over K with the given genus limit.
/// Throws for mixed signature.
std::vector<PhiInterval> phi_intervals(GenusLimit const& limit, ExtensionKind kind);

}  // namespace bstower

#endif  // BSTOWER_TOWER_CERTIFICATE_HPP_
