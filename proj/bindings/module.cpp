#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blockscope/ctj.hpp"
#include "blockscope/report.hpp"
#include "blockscope/scan.hpp"

namespace py = pybind11;
using namespace blockscope;

namespace {

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

} // namespace

PYBIND11_MODULE(_blockscope, m) {
    m.doc() = "p-block defect-group invariants from character tables";

    py::class_<CharacterTable>(m, "Table")
        .def_property_readonly("name", &CharacterTable::name)
        .def_property_readonly("order", &CharacterTable::order)
        .def_property_readonly("num_classes", &CharacterTable::num_classes)
        .def_property_readonly("exponent", &CharacterTable::exponent)
        .def("degree", &CharacterTable::degree, py::arg("chi"))
        .def("power_map", &CharacterTable::power_map, py::arg("k"))
        .def("p_section_representatives",
             [](const CharacterTable& t, long long p) {
                 return t.p_sections(p).representatives;
             },
             py::arg("p"))
        .def("__repr__", [](const CharacterTable& t) {
            return "<blockscope.Table " + t.name() + " order " +
                   std::to_string(t.order()) + ">";
        });

    m.def("load", [](const std::string& path) { return load_table(path); },
          py::arg("path"), "Load and validate a CTJ character table file.");
    m.def("parse", [](const std::string& text) { return parse_table(text); },
          py::arg("text"), "Parse and validate a CTJ document.");
    m.def("serialize", &serialize_table, py::arg("table"));

    m.def(
        "blocks",
        [](const CharacterTable& table, long long p) {
            auto blocks = block_partition(table, p);
            py::list out;
            for (const auto& b : blocks) {
                py::dict d;
                d["characters"] = b.characters;
                d["defect"] = b.defect;
                d["heights"] = b.heights;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("table"), py::arg("p"),
        "Block partition with defects and heights, in canonical order.");

    m.def(
        "gamma",
        [](const CharacterTable& table, long long p) {
            auto blocks = block_partition(table, p);
            py::list out;
            for (size_t i = 0; i < blocks.size(); ++i)
                out.append(rat_string(
                    fusion_number(table, blocks, static_cast<int>(i)).gamma));
            return out;
        },
        py::arg("table"), py::arg("p"),
        "Fusion number of each block as an exact \"num/den\" string.");

    m.def(
        "analyze",
        [](const CharacterTable& table, long long p, int block,
           bool assertAbelian) {
            AnalysisReport rep = analyze_table(table, p, block, assertAbelian);
            return json_loads(report_to_json(rep));
        },
        py::arg("table"), py::arg("p"), py::arg("block") = -1,
        py::arg("assert_abelian") = false,
        "Full invariant report as a dict (same schema as the CLI JSON).");

    m.def(
        "scan",
        [](const std::string& dir, std::vector<long long> primes, int threads) {
            ScanOptions opts;
            opts.primes = std::move(primes);
            opts.threads = threads;
            return json_loads(scan_to_json(scan_directory(dir, opts)));
        },
        py::arg("dir"), py::arg("primes") = std::vector<long long>{},
        py::arg("threads") = 0,
        "Scan a directory of CTJ files for fusion-number anomalies.");

    py::register_exception<UsageError>(m, "BlockscopeUsageError");
    py::register_exception<ValidationError>(m, "BlockscopeValidationError");
    py::register_exception<ParseError>(m, "BlockscopeParseError");
}
