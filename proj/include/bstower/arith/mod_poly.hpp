#ifndef BSTOWER_ARITH_MOD_POLY_HPP_
#define BSTOWER_ARITH_MOD_POLY_HPP_

#include "bstower/arith/int_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bstower {

/// Polynomial over F_p for a prime p < 2^63, coefficients lowest degree first.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static ModPoly from_int_poly(IntPoly const& a, std::uint64_t p);
    static ModPoly constant(std::uint64_t p, std::uint64_t c);
    static ModPoly x(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    std::vector<std::uint64_t> const& coeffs() const { return c_; }

    ModPoly monic() const;
    ModPoly derivative() const;
    /// Lift with coefficients in [0, p).
    IntPoly lift() const;
    std::string to_string(char var = 'x') const;

    friend ModPoly operator+(ModPoly const& a, ModPoly const& b);
    friend ModPoly operator-(ModPoly const& a, ModPoly const& b);
    friend ModPoly operator*(ModPoly const& a, ModPoly const& b);
    friend bool operator==(ModPoly const& a, ModPoly const& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    void normalize();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

struct ModDivision {
    ModPoly quotient;
    ModPoly remainder;
};
ModDivision divmod(ModPoly const& a, ModPoly const& b);
ModPoly operator%(ModPoly const& a, ModPoly const& b);
ModPoly gcd(ModPoly a, ModPoly b);
ModPoly powmod(ModPoly const& base, Integer const& e, ModPoly const& m);
/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<ModPoly> invmod(ModPoly const& a, ModPoly const& m);

/// One irreducible factor of a mod p with its multiplicity.
struct ModFactor {
    ModPoly poly;  // monic irreducible
    int degree = 0;
    int multiplicity = 0;
};

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<ModPoly, int>> squarefree_decomposition(ModPoly const& a);

/// Distinct-degree factorization of a squarefree monic polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(ModPoly const& a);

/// Splits a squarefree monic product of irreducibles of equal degree d.
std::vector<ModPoly> equal_degree_factorization(ModPoly const& a, int d);

bool is_irreducible(ModPoly const& g);

/// Irreducible factors of a mod p (sorted by degree, then coefficients).
/// Throws when a vanishes mod p.
std::vector<ModFactor> factor_mod_p(IntPoly const& a, std::uint64_t p);

/// Degrees with multiplicity, the spec-level view of factor_mod_p.
std::vector<std::pair<int, int>> factor_degrees_mod_p(IntPoly const& a, std::uint64_t p);

enum class SquareClass { zero, square, nonsquare };

/// Quadratic character of e in F_p[x]/(g); g must be irreducible.
SquareClass is_square_in_residue_field(ModPoly const& g, ModPoly const& e);

}  // namespace bstower

#endif  // BSTOWER_ARITH_MOD_POLY_HPP_
