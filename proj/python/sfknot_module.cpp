// Python bindings. Every operation returns the same JSON-lines records the
// command-line tool prints with --format records; the package wrapper turns
// them into dictionaries.

#include "sfknot/census.hpp"
#include "sfknot/codec.hpp"
#include "sfknot/error.hpp"
#include "sfknot/hfk.hpp"
#include "sfknot/invariants.hpp"
#include "sfknot/obstructions.hpp"
#include "sfknot/plumbing.hpp"
#include "sfknot/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace sfknot;

namespace {

Format format_from(const std::string& f)
{
    if (f == "dt") return Format::Dt;
    if (f == "gauss") return Format::Gauss;
    if (f == "pd") return Format::Pd;
    if (f == "braid") return Format::Braid;
    throw Error(ErrorKind::Malformed, "unknown presentation format '" + f + "' (use dt, gauss, pd or braid)");
}

KnotInvariants load(const std::string& format, const std::string& text, const std::string& name,
                    std::optional<int> genus, std::optional<bool> alternating)
{
    std::optional<GenusInput> g;
    if (genus) g = GenusInput{*genus, "user-supplied"};
    return assemble(name, to_diagram(format_from(format), text), g, alternating);
}

}  // namespace

PYBIND11_MODULE(_sfknot, m)
{
    m.doc() = "Seifert fibered surgery obstructions for knots";

    // sfknot.Error subclasses ValueError and carries the error kind name
    static py::handle error_type = PyErr_NewException("sfknot._sfknot.Error", PyExc_ValueError, nullptr);
    m.attr("Error") = error_type;
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = error_kind_name(e.kind());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def(
        "invariants",
        [](const std::string& format, const std::string& text, const std::string& name, std::optional<int> genus,
           std::optional<bool> alternating) {
            return records_invariants(load(format, text, name, genus, alternating));
        },
        py::arg("format"), py::arg("text"), py::arg("name") = "", py::arg("genus") = py::none(),
        py::arg("alternating") = py::none());

    m.def(
        "obstruct",
        [](const std::string& format, const std::string& text, const std::string& name, std::optional<int> genus,
           std::optional<bool> alternating, std::optional<std::string> hfk_text) {
            KnotInvariants inv = load(format, text, name, genus, alternating);
            std::optional<HfkTable> table;
            if (hfk_text) table = parse_hfk(*hfk_text);
            ObstructionReport r = full_report(inv, table);
            return records_invariants(inv) + records_report(r) + records_brieskorn(inv.name, r.brieskorn);
        },
        py::arg("format"), py::arg("text"), py::arg("name") = "", py::arg("genus") = py::none(),
        py::arg("alternating") = py::none(), py::arg("hfk") = py::none());

    m.def(
        "brieskorn",
        [](const std::string& format, const std::string& text, const std::string& name, std::optional<int> genus) {
            KnotInvariants inv = load(format, text, name, genus, std::nullopt);
            return records_brieskorn(inv.name, brieskorn_filter(inv));
        },
        py::arg("format"), py::arg("text"), py::arg("name") = "", py::arg("genus") = py::none());

    m.def(
        "hfk",
        [](const std::string& format, const std::string& text, const std::string& name) {
            KnotInvariants inv = load(format, text, name, std::nullopt, std::nullopt);
            return records_hfk(inv.name, hfk_alternating(inv));
        },
        py::arg("format"), py::arg("text"), py::arg("name") = "");

    m.def(
        "plumbing",
        [](const std::string& tree_text) {
            WeightedTree t = parse_tree(tree_text);
            return records_form(classify_form(t), orientation_class(t));
        },
        py::arg("tree"));

    m.def(
        "scan",
        [](const std::string& table_text, std::optional<bool> alternating, std::optional<int> max_crossings,
           bool perko_corrected, bool parity_rule_applies, int threads) {
            TableLoad t = parse_table(table_text);
            ScanFilter f;
            f.alternating = alternating;
            f.max_crossings = max_crossings;
            f.skip_duplicates = perko_corrected;
            f.require_alternating_parity = parity_rule_applies;
            ScanSummary s;
            {
                py::gil_scoped_release release;
                s = scan(t.records, f, threads);
            }
            return py::make_tuple(records_scan(s), t.errors);
        },
        py::arg("table"), py::arg("alternating") = py::none(), py::arg("max_crossings") = py::none(),
        py::arg("perko_corrected") = false, py::arg("parity_rule_applies") = false, py::arg("threads") = 0);

    m.def(
        "convert",
        [](const std::string& format, const std::string& text, const std::string& to) {
            PlanarDiagram d = to_diagram(format_from(format), text);
            if (to == "dt") return to_dt(d).str();
            if (to == "gauss") return to_gauss(d).str();
            if (to == "pd") return to_pd(d).str();
            throw Error(ErrorKind::Malformed, "cannot convert to '" + to + "' (use dt, gauss or pd)");
        },
        py::arg("format"), py::arg("text"), py::arg("to"));
}
