#ifndef BSTOWER_BOUNDS_TABLE_HPP_
#define BSTOWER_BOUNDS_TABLE_HPP_

#include "bstower/field/quadratic_extension.hpp"

#include <string_view>

namespace bstower {

struct TowerBounds {
    std::string label;
    ExtensionKind kind = ExtensionKind::totally_complex;
    Real bsl;
    Real bsu;
};

struct TableCell {
    std::string text;
    bool computed = false;   // false: literal from configuration, not re-derived
};

struct TableRow {
    std::string condition;
    std::string family;      // "all fields", "totally real" or "totally complex"
    TableCell lower_bound;
    TableCell lower_example;
    TableCell upper_example;
    TableCell upper_bound;
};

struct SummaryTable {
    std::vector<TableRow> rows;
};

struct TableConfig {
    /// A cell value of "computed" is filled from the towers of the row's family.
    struct RowTemplate {
        std::string condition;
        std::string family;
        std::string lower_bound;
        std::string lower_example;
        std::string upper_example;
        std::string upper_bound;
    };
    std::vector<RowTemplate> rows;

    static TableConfig defaults();

    /// One "row = condition | family | lower bound | lower example | upper example | upper bound"
    /// line per row; '#' starts a comment.
    static TableConfig parse(std::string_view text);
};

/// "bsl-bsu" with bsl rounded down and bsu rounded up to 4 decimals.
std::string example_cell(Real const& bsl, Real const& bsu);

/// Rows of the configuration with computed cells filled from the towers; the
/// tower with the smallest lower bound in a family is used. No towers gives an
/// empty table.
SummaryTable emit_table(std::vector<TowerBounds> const& towers, TableConfig const& config = TableConfig::defaults());

/// Plain-text rendering; literal cells carry a '*' marker explained in a footer.
std::string render_text(SummaryTable const& table);

}  // namespace bstower

#endif  // BSTOWER_BOUNDS_TABLE_HPP_
