#include "bstower/tower/certificate.hpp"

#include "bstower/arith/integer_factor.hpp"

namespace bstower {

int delta_ell(FieldOrder const& k, int ell)
{
    if (!is_prime(Integer(ell)))
        throw Error("ell must be prime");
    if (ell == 2)
        return 1;
    if (k.degree() % (ell - 1) != 0)
        return 0;
    throw Error("roots of unity test for ell = " + std::to_string(ell) + " is not supported");
}

RamificationData ramification_data(QuadraticExtension const& K, int ell)
{
    RamificationData r;
    r.t = static_cast<int>(K.relative_disc().ramified.size());
    r.rho = K.signature().rho;
    r.r1 = K.base().r1();
    r.r2 = K.base().r2();
    r.ell = ell;
    r.delta_ell = delta_ell(K.base(), ell);
    return r;
}

int dgt_lower_bound(RamificationData const& r) { return r.t - r.r1 - r.r2 + r.rho - r.delta_ell; }

Real gs_threshold(int r1_K, int r2_K, int theta) { return 2 + 2 * sqrt(Real(r1_K + r2_K + theta)); }

GSCertificate gs_certificate(int d_lower, int r1_K, int r2_K, int theta, std::vector<TPlace> T)
{
    GSCertificate c;
    c.d_lower = d_lower;
    c.theta = theta;
    c.threshold = gs_threshold(r1_K, r2_K, theta);
    c.infinite = Real(d_lower) >= c.threshold;
    c.T = std::move(T);
    return c;
}

AugmentationVerdict verify_tame_augmentation(QuadraticExtension const& K, OrderElement const& p_new,
                                             OrderElement const& p_old, int ell,
                                             std::optional<SquareWitness> witness)
{
    FieldOrder const& k = K.base();
    AugmentationVerdict v;
    auto add = [&](std::string name, bool pass, std::string detail) {
        v.checks.push_back({std::move(name), pass, std::move(detail)});
        return pass;
    };

    auto c_new = verify_prime_element(k, p_new);
    auto c_old = verify_prime_element(k, p_old);
    bool primes_ok = add("new prime certified", c_new.certified,
                         c_new.certified ? "norm " + c_new.norm.get_str() : c_new.reason);
    primes_ok = add("old prime certified", c_old.certified,
                    c_old.certified ? "norm " + c_old.norm.get_str() : c_old.reason) &&
                primes_ok;
    if (primes_ok)
        primes_ok = add("distinct primes", !(*c_new.ideal == *c_old.ideal), "");
    v.aug = k.mul(p_new, p_old);
    if (!primes_ok)
        return v;
    v.new_prime = c_new.ideal;
    v.old_prime = c_old.ideal;

    if (witness) {
        add("square witness", check_square_witness(k, v.aug, *witness), "supplied witness checked");
        v.witness = witness;
    } else {
        v.witness = find_square_witness(k, v.aug);
        add("square witness", v.witness.has_value(), v.witness ? "found by search" : "no beta mod 2 works");
    }
    add("old prime divides eta", c_old.ideal->contains(K.eta()), c_old.ideal->describe());
    add("new prime unramified in K", !c_new.ideal->contains(K.eta()), c_new.ideal->describe());
    add("tame", c_new.ideal->p != ell, "norm " + c_new.norm.get_str() + ", ell = " + std::to_string(ell));

    v.valid = true;
    for (auto const& c : v.checks)
        v.valid = v.valid && c.pass;

    if (!c_new.ideal->contains(K.eta())) {
        KPlace pl = places_above(K, *c_new.ideal);
        v.new_prime_in_K = pl.splitting;
        for (int i = 0; i < pl.count; ++i)
            v.T.push_back({"place of K above " + c_new.ideal->describe() + " (" + to_string(pl.splitting) + ")",
                           pl.norm});
    }

    auto const& eta_signs = K.signature().eta_signs;
    std::vector<int> aug_signs = k.real_signs(v.aug);
    for (std::size_t i = 0; i < eta_signs.size(); ++i)
        if (eta_signs[i] > 0 && aug_signs[i] < 0)
            v.real_places_ramified += 2;
    return v;
}

GenusLimit genus_ratio_limit(Real const& g_K, int n_K, std::vector<Integer> const& t_norms)
{
    if (n_K <= 0)
        throw Error("degree must be positive");
    GenusLimit l;
    l.g_K = g_K;
    l.n_K = n_K;
    l.t_norm_log_sum = 0;
    for (auto const& N : t_norms)
        l.t_norm_log_sum += real_log(N);
    l.ratio_bound = g_K / n_K + l.t_norm_log_sum / (2 * n_K);
    return l;
}

std::vector<PhiInterval> phi_intervals(GenusLimit const& limit, ExtensionKind kind)
{
    Real n = limit.n_K;
    switch (kind) {
    case ExtensionKind::totally_complex:
        return {{Archimedean::real, Real(0), Real(0)},
                {Archimedean::complex, 1 / (2 * limit.ratio_bound), n / (2 * limit.g_K)}};
    case ExtensionKind::totally_real:
        return {{Archimedean::real, 1 / limit.ratio_bound, n / limit.g_K},
                {Archimedean::complex, Real(0), Real(0)}};
    case ExtensionKind::mixed:
        break;
    }
    throw Error("phi intervals need a totally real or totally complex field");
}

}  // namespace bstower
