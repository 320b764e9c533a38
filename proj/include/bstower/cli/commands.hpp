#ifndef BSTOWER_CLI_COMMANDS_HPP_
#define BSTOWER_CLI_COMMANDS_HPP_

#include "bstower/bounds/lp.hpp"
#include "bstower/bounds/table.hpp"
#include "bstower/cli/input.hpp"
#include "bstower/cli/report.hpp"

namespace bstower {

/// Report plus the bounds, when the pipeline got that far.
struct PipelineResult {
    Report report;
    std::optional<ExtensionKind> kind;
    std::optional<BsBounds> bounds;
};

/// Full verification: discriminant, signature, maximality, prime certification,
/// product identity, discriminants, genus, GS certificates, augmentation,
/// phi intervals and BSL/BSU. Reference values come from the document's
/// expect.* keys; a step that throws ends the run as a failure.
PipelineResult run_pipeline(InputDocument const& doc, std::string const& command,
                            InequalityCoefficients const& coeffs = InequalityCoefficients::grh());

/// `verify --example N [--input FILE]`: the bundled document unless one is given.
Report cmd_verify(int example, std::optional<InputDocument> const& input = std::nullopt);

/// `splitting --input FILE --bound Q`: q -> N_q(K) for q <= Q and the archimedean counts.
Report cmd_splitting(InputDocument const& input, std::uint64_t bound);

/// `bounds --input FILE [--ineq FILE]`
Report cmd_bounds(InputDocument const& input, InequalityCoefficients const& coeffs = InequalityCoefficients::grh());

/// `table [--config FILE]`: both bundled examples run through the pipeline.
Report cmd_table(TableConfig const& config = TableConfig::defaults());

/// Exit code of a finished command: 0 on PASS, 1 otherwise.
inline int exit_code(Report const& r) { return r.overall() ? 0 : 1; }

}  // namespace bstower

#endif  // BSTOWER_CLI_COMMANDS_HPP_
