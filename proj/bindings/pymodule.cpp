// Python bindings. Specs and reports cross the boundary as JSON strings; the
// pure-python wrapper turns them into dicts and big ints.
#include "frobaut/autstruct.hpp"
#include "frobaut/oracle.hpp"
#include "frobaut/report.hpp"
#include "frobaut/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

frobaut::KernelActionSpec parse_spec(const std::string& spec_json) {
    return frobaut::spec_from_json(frobaut::json::parse(spec_json));
}

std::vector<frobaut::HMatrix> matrices_for(const frobaut::KernelActionSpec& spec) {
    std::vector<frobaut::HMatrix> hs;
    for (const auto& data : frobaut::validate_and_decompose(spec)) {
        std::vector<std::pair<std::int64_t, std::int64_t>> classes;
        for (const auto& [cls, e] : data.classes) classes.emplace_back(cls.rep, e);
        hs.push_back(frobaut::build_h_matrix(data.p, data.n, classes));
    }
    return hs;
}

}  // namespace

PYBIND11_MODULE(_frobaut, m) {
    m.doc() = "automorphism groups of Frobenius groups (prod C_p^d) : C_n";

    m.def("analyze_json", [](const std::string& spec_json, bool with_timestamp) {
        return frobaut::report_document(frobaut::analyze(parse_spec(spec_json)), with_timestamp)
            .dump();
    }, py::arg("spec_json"), py::arg("with_timestamp") = false);

    m.def("analyze_text", [](const std::string& spec_json) {
        return frobaut::report_to_text(frobaut::analyze(parse_spec(spec_json)));
    });

    m.def("aut_order_str", [](const std::string& spec_json) {
        return frobaut::aut_order(parse_spec(spec_json)).str();
    });

    m.def("structure", [](const std::string& spec_json) {
        return frobaut::analyze(parse_spec(spec_json)).structure;
    });

    m.def("normalizer_oracle_str", [](const std::string& spec_json, std::uint64_t limit) {
        auto spec = parse_spec(spec_json);
        auto hs = matrices_for(spec);
        auto counted = hs.size() == 1 ? frobaut::count_normalizer_bruteforce(hs[0], limit)
                                      : frobaut::count_normalizer_joint(hs, limit);
        return counted.str();
    }, py::arg("spec_json"), py::arg("limit") = std::uint64_t(1) << 26);

    m.def("aut_oracle_str", [](const std::string& spec_json, double limit) {
        auto spec = parse_spec(spec_json);
        auto g = frobaut::build_group(spec);
        return frobaut::count_automorphisms_bruteforce(g, frobaut::find_generating_set(g), limit)
            .str();
    }, py::arg("spec_json"), py::arg("limit") = 4294967296.0);

    m.def("sweep_json", [](std::int64_t p, std::int64_t n, std::int64_t max_d) {
        std::vector<std::string> out;
        for (const auto& spec : frobaut::enumerate_sweep_specs(p, n, max_d))
            out.push_back(frobaut::spec_to_json(spec).dump());
        return out;
    });

    m.def("prime_power_complement_report", [](const std::string& spec_json) {
        return frobaut::prime_power_complement_report(parse_spec(spec_json));
    });

    m.attr("__version__") = frobaut::kToolVersion;

    py::register_exception<frobaut::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<frobaut::OracleBoundError>(m, "OracleBoundError", PyExc_RuntimeError);
}
