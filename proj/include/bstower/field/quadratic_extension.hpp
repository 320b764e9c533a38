#ifndef BSTOWER_FIELD_QUADRATIC_EXTENSION_HPP_
#define BSTOWER_FIELD_QUADRATIC_EXTENSION_HPP_

#include "bstower/field/order.hpp"

#include <map>

namespace bstower {

/// eta = beta^2 + 4*gamma with beta, gamma in Z[xi].
struct SquareWitness {
    OrderElement beta;
    OrderElement gamma;
};

bool check_square_witness(FieldOrder const& k, OrderElement const& eta, SquareWitness const& w);

/// Exhaustive search over beta with coordinates in {0, 1}.
std::optional<SquareWitness> find_square_witness(FieldOrder const& k, OrderElement const& eta);

/// Relative discriminant of k(sqrt(eta))/k for squarefree (eta). With a witness
/// it is (eta); otherwise the (4*eta) pattern is reported.
struct RelativeDiscriminant {
    Integer norm;
    std::optional<SquareWitness> witness;
    std::vector<PrimeIdeal> ramified;
};

RelativeDiscriminant relative_quadratic_discriminant(FieldOrder const& k, OrderElement const& eta);

enum class ExtensionKind { totally_complex, totally_real, mixed };

std::string to_string(ExtensionKind kind);

struct ExtensionSignature {
    int r1 = 0;
    int r2 = 0;
    int rho = 0;  // real places of k that become complex
    ExtensionKind kind = ExtensionKind::mixed;
    std::vector<int> eta_signs;
};

ExtensionSignature extension_signature(FieldOrder const& k, OrderElement const& eta);

enum class Splitting { split, inert, ramified };

std::string to_string(Splitting s);

/// The quadratic extension K = k(sqrt(eta)).
class QuadraticExtension {
public:
    /// Verifies a supplied witness or searches for one; requires (eta) squarefree
    /// and Z[xi] maximal.
    QuadraticExtension(FieldOrder k, OrderElement eta, std::optional<SquareWitness> witness = std::nullopt);

    FieldOrder const& base() const { return k_; }
    OrderElement const& eta() const { return eta_; }
    int degree() const { return 2 * k_.degree(); }
    RelativeDiscriminant const& relative_disc() const { return rel_; }
    Integer const& abs_disc() const { return abs_disc_; }
    Real const& genus() const { return genus_; }
    ExtensionSignature const& signature() const { return sig_; }

    /// Behaviour of a prime of k in K.
    Splitting splitting_at(PrimeIdeal const& q) const;

private:
    FieldOrder k_;
    OrderElement eta_;
    RelativeDiscriminant rel_;
    Integer abs_disc_;
    Real genus_;
    ExtensionSignature sig_;
};

/// The places of K above one prime of k; `count` of them share norm, e and f.
struct KPlace {
    PrimeIdeal below;
    Splitting splitting = Splitting::split;
    int count = 0;     // 2 if split, else 1
    Integer norm;      // norm of each place
    int e = 1;         // absolute ramification index
    int f = 1;         // absolute residue degree
};

KPlace places_above(QuadraticExtension const& K, PrimeIdeal const& q);

struct PlaceTally {
    std::uint64_t bound = 0;
    std::map<std::uint64_t, int> counts;  // q -> N_q(K), nonzero entries only
    int n_real = 0;
    int n_complex = 0;
    int degree = 0;
    std::vector<KPlace> places;           // all places above rational p <= bound

    int count(std::uint64_t q) const;
    /// Sum of e*f over the places above p.
    int local_degree_sum(std::uint64_t p) const;
};

PlaceTally place_tally(QuadraticExtension const& K, std::uint64_t bound);

/// Certifies that a is not a square in k via a negative real embedding, a
/// non-square norm or a quadratic non-residue modulo a prime up to max_prime.
struct NonSquareCertificate {
    bool certified = false;
    std::string reason;
};

NonSquareCertificate certify_nonsquare(FieldOrder const& k, OrderElement const& a, std::uint64_t max_prime = 1000);

}  // namespace bstower

#endif  // BSTOWER_FIELD_QUADRATIC_EXTENSION_HPP_
