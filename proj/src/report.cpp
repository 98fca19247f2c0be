#include "frobaut/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace frobaut {

const char* const kToolVersion = "0.1.0";

namespace {
std::string nat_str(const Nat& n) { return n.str(); }
}  // namespace

KernelActionSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("components"))
        throw ValidationError("spec must be an object with \"n\" and \"components\"");
    KernelActionSpec spec;
    if (!j["n"].is_number_integer()) throw ValidationError("\"n\" must be an integer");
    spec.n = j["n"].get<std::int64_t>();
    if (!j["components"].is_array() || j["components"].empty())
        throw ValidationError("\"components\" must be a nonempty array");
    for (const auto& jc : j["components"]) {
        PrimeComponentSpec comp;
        if (!jc.contains("p") || !jc["p"].is_number_integer())
            throw ValidationError("component needs an integer \"p\"");
        comp.p = jc["p"].get<std::int64_t>();
        if (!jc.contains("constituents") || !jc["constituents"].is_array() ||
            jc["constituents"].empty())
            throw ValidationError("component needs a nonempty \"constituents\" array");
        for (const auto& jk : jc["constituents"]) {
            if (!jk.contains("r") || !jk["r"].is_number_integer() || !jk.contains("e") ||
                !jk["e"].is_number_integer())
                throw ValidationError("constituent needs integer \"r\" and \"e\"");
            comp.constituents.push_back(
                Constituent{jk["r"].get<std::int64_t>(), jk["e"].get<std::int64_t>()});
        }
        spec.components.push_back(std::move(comp));
    }
    return spec;
}

json spec_to_json(const KernelActionSpec& spec) {
    json j;
    j["n"] = spec.n;
    j["components"] = json::array();
    for (const auto& comp : spec.components) {
        json jc;
        jc["p"] = comp.p;
        jc["constituents"] = json::array();
        for (const auto& cst : comp.constituents)
            jc["constituents"].push_back({{"r", cst.r}, {"e", cst.e}});
        j["components"].push_back(std::move(jc));
    }
    return j;
}

std::string spec_hash(const KernelActionSpec& spec) {
    std::string s = spec_to_json(spec).dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

json report_to_json(const AutReport& report) {
    json j;
    j["spec"] = spec_to_json(report.spec);
    j["components"] = json::array();
    for (const auto& comp : report.components) {
        json jc;
        jc["p"] = comp.data.p;
        jc["f"] = comp.data.f;
        jc["d"] = comp.data.d;
        jc["classes"] = json::array();
        for (const auto& [cls, e] : comp.data.classes)
            jc["classes"].push_back({{"rep", cls.rep}, {"elements", cls.elements}, {"e", e}});
        jc["fusion"] = {{"ell", comp.fusion.ell},
                        {"s", comp.fusion.s},
                        {"field_auto_order", comp.fusion.field_auto_order},
                        {"orbits", comp.fusion.orbits},
                        {"e_per_orbit", comp.fusion.e_per_orbit}};
        jc["centralizer_order"] = nat_str(comp.centralizer_order);
        jc["homogeneous"] = comp.homogeneous;
        jc["m_irreducible"] = comp.m_irreducible;
        j["components"].push_back(std::move(jc));
    }
    j["stabilizer"] = {{"n", report.stabilizer.n},
                       {"elements", report.stabilizer.elements},
                       {"order", report.stabilizer.order},
                       {"invariants", report.stabilizer.invariants}};
    j["centralizer_order"] = nat_str(report.centralizer_order);
    j["normalizer_order"] = nat_str(report.normalizer_order);
    j["kernel_order"] = nat_str(report.kernel_order);
    j["aut_order"] = nat_str(report.aut_order);
    j["structure"] = report.structure;
    j["notes"] = report.notes;
    return j;
}

json report_document(const AutReport& report, bool with_timestamp) {
    json doc = report_to_json(report);
    json prov;
    prov["tool"] = "frobaut";
    prov["version"] = kToolVersion;
    prov["spec_hash"] = spec_hash(report.spec);
    if (with_timestamp) {
        auto now = std::chrono::system_clock::now();
        prov["timestamp"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    doc["provenance"] = std::move(prov);
    return doc;
}

std::string report_to_text(const AutReport& report) {
    std::ostringstream out;
    out << "spec: n = " << report.spec.n << "\n";
    for (const auto& comp : report.components) {
        out << "component p = " << comp.data.p << ": f = " << comp.data.f
            << ", d = " << comp.data.d << "\n";
        for (const auto& [cls, e] : comp.data.classes) {
            out << "  class {";
            for (size_t i = 0; i < cls.elements.size(); ++i)
                out << (i ? "," : "") << cls.elements[i];
            out << "} e = " << e << "\n";
        }
        out << "  fusion: ell = " << comp.fusion.ell << ", s = " << comp.fusion.s
            << ", field_auto_order = " << comp.fusion.field_auto_order << "\n";
        out << "  centralizer_order = " << comp.centralizer_order.str() << "\n";
        out << "  homogeneous = " << (comp.homogeneous ? "true" : "false")
            << ", m_irreducible = " << (comp.m_irreducible ? "true" : "false") << "\n";
    }
    out << "stabilizer Lambda = {";
    for (size_t i = 0; i < report.stabilizer.elements.size(); ++i)
        out << (i ? "," : "") << report.stabilizer.elements[i];
    out << "}, order " << report.stabilizer.order << ", invariants [";
    for (size_t i = 0; i < report.stabilizer.invariants.size(); ++i)
        out << (i ? "," : "") << report.stabilizer.invariants[i];
    out << "]\n";
    out << "centralizer_order = " << report.centralizer_order.str() << "\n";
    out << "normalizer_order = " << report.normalizer_order.str() << "\n";
    out << "kernel_order = " << report.kernel_order.str() << "\n";
    out << "aut_order = " << report.aut_order.str() << "\n";
    out << "structure = " << report.structure << "\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

}  // namespace frobaut
