#include "bstower/bounds/table.hpp"

#include <algorithm>
#include <sstream>

namespace bstower {

namespace {

constexpr char const* kComputed = "computed";

std::string trim(std::string const& s)
{
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string fixed4(Real const& x, Rounding dir)
{
    Real scaled = x * 10000;
    Real r = dir == Rounding::down ? floor(scaled) : ceil(scaled);
    return format_fixed(r / 10000, 4);
}

bool family_matches(std::string const& family, ExtensionKind kind)
{
    if (family == "all fields")
        return true;
    return family == to_string(kind);
}

}  // namespace

TableConfig TableConfig::defaults()
{
    return parse(R"(
row = GRH | all fields | 0.5165 | computed | 1.0602-1.0798 | 1.0938
row = GRH | totally real | 0.7419 | computed | 1.0602-1.0798 | 1.0938
row = GRH | totally complex | 0.5165 | computed | 1.0482-1.0653 | 1.0764
row = Unconditional | all fields | 0.4087 | 0.5939-0.6208 | 1.0602-1.1133 | 1.1588
row = Unconditional | totally real | 0.6625 | 0.8009-0.9081 | 1.0602-1.1133 | 1.1588
row = Unconditional | totally complex | 0.4087 | 0.5939-0.6208 | 1.0482-1.1026 | 1.1310
)");
}

TableConfig TableConfig::parse(std::string_view text)
{
    TableConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos || trim(line.substr(0, eq)) != "row")
            throw Error("table config line " + std::to_string(lineno) + ": expected 'row = ...'");
        std::vector<std::string> cells;
        std::istringstream fields(line.substr(eq + 1));
        std::string cell;
        while (std::getline(fields, cell, '|'))
            cells.push_back(trim(cell));
        if (cells.size() != 6)
            throw Error("table config line " + std::to_string(lineno) + ": expected 6 cells");
        if (cells[1] != "all fields" && cells[1] != "totally real" && cells[1] != "totally complex")
            throw Error("table config line " + std::to_string(lineno) + ": unknown family '" + cells[1] + "'");
        cfg.rows.push_back({cells[0], cells[1], cells[2], cells[3], cells[4], cells[5]});
    }
    return cfg;
}

std::string example_cell(Real const& bsl, Real const& bsu)
{
    return fixed4(bsl, Rounding::down) + "-" + fixed4(bsu, Rounding::up);
}

SummaryTable emit_table(std::vector<TowerBounds> const& towers, TableConfig const& config)
{
    SummaryTable table;
    if (towers.empty())
        return table;
    for (auto const& tmpl : config.rows) {
        TowerBounds const* best = nullptr;
        for (auto const& t : towers)
            if (family_matches(tmpl.family, t.kind) && (!best || t.bsl < best->bsl))
                best = &t;
        auto fill = [&](std::string const& value) {
            if (value != kComputed)
                return TableCell{value, false};
            return TableCell{best ? example_cell(best->bsl, best->bsu) : "n/a", true};
        };
        table.rows.push_back({tmpl.condition, tmpl.family, fill(tmpl.lower_bound), fill(tmpl.lower_example),
                              fill(tmpl.upper_example), fill(tmpl.upper_bound)});
    }
    return table;
}

std::string render_text(SummaryTable const& table)
{
    std::vector<std::vector<std::string>> grid{
        {"", "", "lower bound", "lower example", "upper example", "upper bound"}};
    bool any_literal = false;
    for (auto const& r : table.rows) {
        std::vector<std::string> line{r.condition, r.family};
        for (TableCell const* c : {&r.lower_bound, &r.lower_example, &r.upper_example, &r.upper_bound}) {
            line.push_back(c->computed ? c->text : c->text + "*");
            any_literal = any_literal || !c->computed;
        }
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(6, 0);
    for (auto const& line : grid)
        for (std::size_t i = 0; i < line.size(); ++i)
            width[i] = std::max(width[i], line[i].size());
    std::ostringstream out;
    for (auto const& line : grid) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            text += line[i] + std::string(width[i] - line[i].size(), ' ');
            if (i + 1 < line.size())
                text += "  ";
        }
        text.erase(text.find_last_not_of(' ') + 1);
        out << text << '\n';
    }
    if (any_literal)
        out << "* literal from configuration, not re-derived\n";
    return out.str();
}

}  // namespace bstower
