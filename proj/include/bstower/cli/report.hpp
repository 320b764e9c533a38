#ifndef BSTOWER_CLI_REPORT_HPP_
#define BSTOWER_CLI_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bstower {

/// One verification step. Empty `expected`, `tolerance` and `delta` mean the
/// step has no reference value. Informational steps never fail.
struct ReportStep {
    std::string name;
    std::string computed;
    std::string expected;
    std::string tolerance;
    std::string delta;
    bool pass = true;
    bool informational = false;
    std::string detail;

    friend bool operator==(ReportStep const&, ReportStep const&) = default;
};

/// A reference value the run could not reproduce within tolerance.
struct Deviation {
    std::string step;
    std::string computed;
    std::string expected;
    std::string tolerance;
    std::string delta;
    std::string analysis;

    friend bool operator==(Deviation const&, Deviation const&) = default;
};

struct Report {
    std::string command;
    std::string subject;
    std::vector<ReportStep> steps;
    std::vector<Deviation> deviations;
    std::vector<std::string> output;   // rendered text lines (tally, table)

    bool overall() const;
    std::optional<std::string> first_failure() const;

    /// JSON document, format "bstower-report/1".
    std::string to_json(int indent = 2) const;
    static Report from_json(std::string_view text);

    std::string render_text() const;

    friend bool operator==(Report const&, Report const&) = default;
};

}  // namespace bstower

#endif  // BSTOWER_CLI_REPORT_HPP_
