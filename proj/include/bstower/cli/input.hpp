#ifndef BSTOWER_CLI_INPUT_HPP_
#define BSTOWER_CLI_INPUT_HPP_

#include "bstower/arith/int_poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bstower {

/// A claimed prime factor of eta: label, claimed |norm| and generator.
struct FactorEntry {
    std::string label;
    Integer norm;
    IntPoly poly;
};

struct AugmentationInput {
    std::optional<IntPoly> new_prime;
    std::optional<IntPoly> old_prime;
    std::optional<IntPoly> product;   // claimed value of new_prime * old_prime
    std::optional<IntPoly> beta;
    std::optional<IntPoly> gamma;
};

enum class ProductMode { exact, up_to_unit };

/// Line-oriented "key = value" document; '#' starts a comment. Polynomials are
/// written in x, integers may be given as products such as 7*13*19^2.
///
///   name, degree, poly, eta, eta_unit, eta_abstract, beta, gamma,
///   factor = label : norm : poly   (repeatable),
///   product_mode = exact | up_to_unit,
///   aug.new, aug.old, aug.product, aug.beta, aug.gamma,
///   ell, bound, deviation.t_norms = n1, n2, ...,
///   expect.<step> = value, tolerance.<step> = value
struct InputDocument {
    std::string name;
    std::optional<int> degree;
    IntPoly poly;
    IntPoly eta;
    int eta_unit = 1;
    std::optional<IntPoly> eta_abstract;
    std::optional<IntPoly> beta;
    std::optional<IntPoly> gamma;
    std::vector<FactorEntry> factors;
    ProductMode product_mode = ProductMode::exact;
    AugmentationInput aug;
    int ell = 2;
    std::uint64_t bound = 100;
    std::vector<Integer> deviation_t_norms;
    std::map<std::string, std::string> expect;
    std::map<std::string, std::string> tolerance;

    static InputDocument parse(std::string_view text);
    static InputDocument load(std::string const& path);
};

/// Product of signed prime powers, e.g. "-23*35509" or "7*13*19^2".
Integer parse_integer_expression(std::string_view text);

/// Bundled documents for the two worked examples (1 or 2).
std::string_view bundled_example(int example);

}  // namespace bstower

#endif  // BSTOWER_CLI_INPUT_HPP_
