#include "bstower/cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kUsageError = 2;

std::string read_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw bstower::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Writes <dir>/<stem>.json when BSTOWER_REPORT_DIR is set.
void save_report(bstower::Report const& r, std::string const& stem)
{
    char const* dir = std::getenv("BSTOWER_REPORT_DIR");
    if (!dir || !*dir)
        return;
    std::filesystem::create_directories(dir);
    std::filesystem::path path = std::filesystem::path(dir) / (stem + ".json");
    std::ofstream out(path);
    if (!out)
        throw bstower::Error("cannot write report '" + path.string() + "'");
    out << r.to_json() << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certificates and Brauer-Siegel bounds for class field towers"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print the machine-readable report instead of text");

    int example = 0;
    std::string input_path, ineq_path, config_path;
    std::uint64_t bound = 0;

    auto* verify = app.add_subcommand("verify", "Run the verification pipeline for a worked example");
    verify->add_option("--example", example, "Example number")->required()->check(CLI::IsMember({1, 2}));
    verify->add_option("--input", input_path, "Input document replacing the bundled one")->check(CLI::ExistingFile);

    auto* splitting = app.add_subcommand("splitting", "List q -> N_q(K) for prime powers q <= Q");
    splitting->add_option("--input", input_path, "Input document")->required()->check(CLI::ExistingFile);
    splitting->add_option("--bound", bound, "Bound Q")->required()->check(CLI::PositiveNumber);

    auto* bounds = app.add_subcommand("bounds", "Brauer-Siegel bounds for the tower of an input document");
    bounds->add_option("--input", input_path, "Input document")->required()->check(CLI::ExistingFile);
    bounds->add_option("--ineq", ineq_path, "Basic inequality coefficients")->check(CLI::ExistingFile);

    auto* table = app.add_subcommand("table", "Summary table from the computed examples");
    table->add_option("--config", config_path, "Table configuration")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    bstower::Report report;
    std::string stem;
    try {
        if (*verify) {
            std::optional<bstower::InputDocument> doc;
            if (!input_path.empty())
                doc = bstower::InputDocument::load(input_path);
            report = bstower::cmd_verify(example, doc);
            stem = "verify-example" + std::to_string(example);
        } else if (*splitting) {
            report = bstower::cmd_splitting(bstower::InputDocument::load(input_path), bound);
            stem = "splitting";
        } else if (*bounds) {
            auto coeffs = ineq_path.empty() ? bstower::InequalityCoefficients::grh()
                                            : bstower::InequalityCoefficients::parse(read_file(ineq_path));
            report = bstower::cmd_bounds(bstower::InputDocument::load(input_path), coeffs);
            stem = "bounds";
        } else {
            auto config = config_path.empty() ? bstower::TableConfig::defaults()
                                              : bstower::TableConfig::parse(read_file(config_path));
            report = bstower::cmd_table(config);
            stem = "table";
        }
    } catch (bstower::Error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        save_report(report, stem);
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    std::cout << (json ? report.to_json() + "\n" : report.render_text());
    return bstower::exit_code(report);
}
