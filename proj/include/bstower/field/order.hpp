#ifndef BSTOWER_FIELD_ORDER_HPP_
#define BSTOWER_FIELD_ORDER_HPP_

#include "bstower/arith/mod_poly.hpp"
#include "bstower/arith/real_roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bstower {

/// Element of Z[xi] in the power basis 1, xi, ..., xi^(n-1).
class OrderElement {
public:
    OrderElement() = default;
    explicit OrderElement(std::vector<Integer> coords) : coords_(std::move(coords)) {}

    std::vector<Integer> const& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    bool is_zero() const;
    IntPoly as_poly() const { return IntPoly(coords_); }
    std::string to_string(char var = 'x') const { return as_poly().to_string(var); }

    friend bool operator==(OrderElement const&, OrderElement const&) = default;

private:
    std::vector<Integer> coords_;
};

/// A prime of Z[xi] above p, written (p, g(xi)) with g irreducible mod p.
/// Valid as a description of a prime ideal only where Z[xi] is p-maximal.
struct PrimeIdeal {
    Integer p;
    ModPoly residue;            // monic irreducible factor of f mod p
    int ramification = 1;       // e over p
    int residue_degree = 1;     // f over p

    Integer norm() const;
    bool contains(OrderElement const& a) const;
    std::string describe() const;
    friend bool operator==(PrimeIdeal const& a, PrimeIdeal const& b) { return a.p == b.p && a.residue == b.residue; }
};

struct DedekindResult {
    Integer p;
    bool maximal = false;
    std::vector<ModFactor> factors;
};

struct PrimeCertificate {
    bool certified = false;
    Integer norm;                      // |Norm(e)|
    std::optional<PrimeIdeal> ideal;
    std::string reason;                // populated when not certified
};

/// The monogenic order Z[xi] = Z[x]/(f) for a monic irreducible f.
class FieldOrder {
public:
    /// Checks that f is monic and irreducible and computes signature and discriminant.
    explicit FieldOrder(IntPoly f);

    IntPoly const& poly() const { return f_; }
    int degree() const { return f_.degree(); }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    Integer const& poly_discriminant() const { return disc_; }

    OrderElement element(IntPoly const& a) const;
    OrderElement one() const;
    OrderElement zero() const;
    OrderElement from_ints(std::vector<long> const& low_first) const;

    OrderElement add(OrderElement const& a, OrderElement const& b) const;
    OrderElement sub(OrderElement const& a, OrderElement const& b) const;
    OrderElement neg(OrderElement const& a) const;
    OrderElement scale(Integer const& c, OrderElement const& a) const;
    OrderElement mul(OrderElement const& a, OrderElement const& b) const;
    OrderElement product(std::vector<OrderElement> const& es) const;

    /// Norm_{k/Q}(a) = Res(f, a); throws for a = 0.
    Integer norm(OrderElement const& a) const;

    /// a / b if the quotient lies in Z[xi].
    std::optional<OrderElement> divide_exact(OrderElement const& a, OrderElement const& b) const;

    /// Residue of a in F_p[x]/(g).
    ModPoly reduce(OrderElement const& a, ModPoly const& g) const;

    /// Dedekind's criterion at p.
    DedekindResult dedekind(Integer const& p) const;

    /// Primes above p; throws "order not maximal at p" when Dedekind fails.
    std::vector<PrimeIdeal> primes_above(Integer const& p) const;

    /// Dedekind at every prime dividing disc(f); throws on the first failure.
    std::vector<DedekindResult> verify_maximal() const;

    /// Field discriminant; equals disc(f) once verify_maximal() has passed.
    Integer field_discriminant() const;

    /// Real roots of f in increasing order, as isolating intervals.
    std::vector<RootInterval> const& real_roots() const { return real_roots_; }

    /// Sign of a at each real embedding.
    std::vector<int> real_signs(OrderElement const& a) const;

    void check(OrderElement const& a) const;

private:
    IntPoly f_;
    int r1_ = 0;
    int r2_ = 0;
    Integer disc_;
    std::vector<RootInterval> real_roots_;
};

/// Certifies (e) as a prime ideal from its norm and the residue reductions.
PrimeCertificate verify_prime_element(FieldOrder const& k, OrderElement const& e);

/// Distinct prime divisors of (a). When require_squarefree is set, throws
/// unless every valuation is 1 (checked against the norm factorization).
std::vector<PrimeIdeal> prime_divisors(FieldOrder const& k, OrderElement const& a, bool require_squarefree);

/// Certifies irreducibility over Q from factor degree patterns mod small primes.
bool certify_irreducible(IntPoly const& f, std::uint64_t max_prime = 1000);

}  // namespace bstower

#endif  // BSTOWER_FIELD_ORDER_HPP_
