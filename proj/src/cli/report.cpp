#include "bstower/cli/report.hpp"

#include "bstower/arith/numeric.hpp"

#include <json.hpp>

#include <sstream>

namespace bstower {

namespace {

constexpr char const* kFormat = "bstower-report/1";

using nlohmann::json;

json optional_string(std::string const& s) { return s.empty() ? json(nullptr) : json(s); }

std::string read_optional(json const& j, char const* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return {};
    return j.at(key).get<std::string>();
}

}  // namespace

bool Report::overall() const
{
    for (auto const& s : steps)
        if (!s.informational && !s.pass)
            return false;
    return true;
}

std::optional<std::string> Report::first_failure() const
{
    for (auto const& s : steps)
        if (!s.informational && !s.pass)
            return s.name;
    return std::nullopt;
}

std::string Report::to_json(int indent) const
{
    json j;
    j["format"] = kFormat;
    j["command"] = command;
    j["subject"] = subject;
    j["overall"] = overall() ? "PASS" : "FAIL";
    auto first = first_failure();
    j["first_failure"] = first ? json(*first) : json(nullptr);
    j["steps"] = json::array();
    for (auto const& s : steps) {
        j["steps"].push_back({{"name", s.name},
                              {"computed", s.computed},
                              {"expected", optional_string(s.expected)},
                              {"tolerance", optional_string(s.tolerance)},
                              {"delta", optional_string(s.delta)},
                              {"pass", s.pass},
                              {"informational", s.informational},
                              {"detail", optional_string(s.detail)}});
    }
    j["deviations"] = json::array();
    for (auto const& d : deviations) {
        j["deviations"].push_back({{"step", d.step},
                                   {"computed", d.computed},
                                   {"expected", d.expected},
                                   {"tolerance", d.tolerance},
                                   {"delta", d.delta},
                                   {"analysis", d.analysis}});
    }
    j["output"] = output;
    return j.dump(indent);
}

Report Report::from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::exception const& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != kFormat)
            throw Error("unsupported report format '" + j.at("format").get<std::string>() + "'");
        Report r;
        r.command = j.at("command").get<std::string>();
        r.subject = j.at("subject").get<std::string>();
        for (auto const& s : j.at("steps")) {
            ReportStep step;
            step.name = s.at("name").get<std::string>();
            step.computed = s.at("computed").get<std::string>();
            step.expected = read_optional(s, "expected");
            step.tolerance = read_optional(s, "tolerance");
            step.delta = read_optional(s, "delta");
            step.pass = s.at("pass").get<bool>();
            step.informational = s.at("informational").get<bool>();
            step.detail = read_optional(s, "detail");
            r.steps.push_back(std::move(step));
        }
        for (auto const& d : j.at("deviations")) {
            r.deviations.push_back({d.at("step").get<std::string>(), d.at("computed").get<std::string>(),
                                    d.at("expected").get<std::string>(), d.at("tolerance").get<std::string>(),
                                    d.at("delta").get<std::string>(), d.at("analysis").get<std::string>()});
        }
        r.output = j.at("output").get<std::vector<std::string>>();
        if ((j.at("overall").get<std::string>() == "PASS") != r.overall())
            throw Error("report 'overall' disagrees with its steps");
        return r;
    } catch (json::exception const& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
}

std::string Report::render_text() const
{
    std::ostringstream out;
    out << command << ": " << subject << '\n';
    for (auto const& line : output)
        out << line << '\n';
    for (auto const& s : steps) {
        char const* tag = s.informational ? "INFO" : s.pass ? "PASS" : "FAIL";
        out << "[" << tag << "] " << s.name << ": " << s.computed;
        if (!s.expected.empty()) {
            out << " (expected " << s.expected;
            if (!s.tolerance.empty())
                out << "; tolerance " << s.tolerance;
            if (!s.delta.empty())
                out << "; delta " << s.delta;
            out << ")";
        }
        out << '\n';
        if (!s.detail.empty())
            out << "       " << s.detail << '\n';
    }
    for (auto const& d : deviations) {
        out << "deviation at " << d.step << ": computed " << d.computed << ", expected " << d.expected << ", tolerance "
            << d.tolerance << ", delta " << d.delta << '\n';
        out << "       " << d.analysis << '\n';
    }
    if (!steps.empty()) {
        auto first = first_failure();
        out << "overall: " << (overall() ? "PASS" : "FAIL");
        if (first)
            out << " (first failure: " << *first << ")";
        out << '\n';
    }
    return out.str();
}

}  // namespace bstower
