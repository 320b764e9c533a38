#include "bstower/bounds/phi.hpp"
#include "bstower/cli/commands.hpp"
#include "bstower/field/order.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>

namespace py = pybind11;
using namespace bstower;

namespace {

PhiIndex phi_index(std::string const& key)
{
    if (key == "R")
        return PhiIndex::real();
    if (key == "C")
        return PhiIndex::complex();
    std::size_t used = 0;
    unsigned long long q = 0;
    try {
        q = std::stoull(key, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used == 0 || used != key.size())
        throw Error("phi index must be 'R', 'C' or a prime power, got '" + key + "'");
    return PhiIndex::prime_power(q);
}

}  // namespace

PYBIND11_MODULE(_bstower, m) {
    m.doc() = "Certificates and Brauer-Siegel bounds for class field towers";

    py::register_exception<Error>(m, "BstowerError", PyExc_ValueError);

    m.def("bundled_example", [](int n) { return std::string(bundled_example(n)); }, py::arg("example"),
          "Text of the bundled input document for example 1 or 2.");

    m.def(
        "verify",
        [](int example, std::optional<std::string> const& document) {
            std::optional<InputDocument> doc;
            if (document)
                doc = InputDocument::parse(*document);
            py::gil_scoped_release release;
            return cmd_verify(example, doc).to_json();
        },
        py::arg("example"), py::arg("document") = py::none(), "Verification report as JSON text.");

    m.def(
        "splitting",
        [](std::string const& document, std::uint64_t bound) {
            auto doc = InputDocument::parse(document);
            py::gil_scoped_release release;
            return cmd_splitting(doc, bound).to_json();
        },
        py::arg("document"), py::arg("bound"), "Splitting report as JSON text.");

    m.def(
        "bounds",
        [](std::string const& document, std::optional<std::string> const& ineq) {
            auto doc = InputDocument::parse(document);
            auto coeffs = ineq ? InequalityCoefficients::parse(*ineq) : InequalityCoefficients::grh();
            py::gil_scoped_release release;
            return cmd_bounds(doc, coeffs).to_json();
        },
        py::arg("document"), py::arg("ineq") = py::none(), "Bounds report as JSON text.");

    m.def(
        "table",
        [](std::optional<std::string> const& config) {
            auto cfg = config ? TableConfig::parse(*config) : TableConfig::defaults();
            py::gil_scoped_release release;
            return cmd_table(cfg).to_json();
        },
        py::arg("config") = py::none(), "Summary table report as JSON text.");

    m.def(
        "field_invariants",
        [](std::string const& poly) {
            FieldOrder k(IntPoly::parse(poly));
            return py::make_tuple(k.poly_discriminant().get_str(), k.r1(), k.r2());
        },
        py::arg("poly"), "(disc(f) as decimal text, r1, r2) of Q[x]/(f).");

    m.def(
        "bs_ratio",
        [](std::map<std::string, double> const& phi) {
            PhiVector v;
            for (auto const& [key, value] : phi)
                v.set(phi_index(key), Real(value));
            return bs_ratio(v).convert_to<double>();
        },
        py::arg("phi"), "Brauer-Siegel ratio of a phi vector keyed by 'R', 'C' and prime powers.");
}
