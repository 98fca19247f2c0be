#include "frobaut/autstruct.hpp"
#include "frobaut/oracle.hpp"
#include "frobaut/report.hpp"
#include "frobaut/rng_guard.hpp"
#include "frobaut/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBound = 3;

frobaut::KernelActionSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw frobaut::ValidationError("cannot open spec file: " + path);
    frobaut::json j;
    try {
        in >> j;
    } catch (const frobaut::json::exception& e) {
        throw frobaut::ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return frobaut::spec_from_json(j);
}

std::vector<frobaut::HMatrix> build_matrices(const frobaut::KernelActionSpec& spec) {
    std::vector<frobaut::HMatrix> hs;
    for (const auto& data : frobaut::validate_and_decompose(spec)) {
        std::vector<std::pair<std::int64_t, std::int64_t>> classes;
        for (const auto& [cls, e] : data.classes) classes.emplace_back(cls.rep, e);
        hs.push_back(frobaut::build_h_matrix(data.p, data.n, classes));
    }
    return hs;
}

int run_analyze(const std::string& path, bool as_json) {
    auto report = frobaut::analyze(load_spec(path));
    if (as_json)
        std::cout << frobaut::report_document(report).dump(2) << "\n";
    else
        std::cout << frobaut::report_to_text(report);
    return kExitOk;
}

int run_verify(const std::string& path, const std::string& oracle_sel, std::uint64_t limit) {
    auto spec = load_spec(path);
    auto report = frobaut::analyze(spec);
    frobaut::json doc = frobaut::report_document(report);
    doc["verification"] = frobaut::json::array();
    bool all_match = true;

    if (oracle_sel == "normalizer" || oracle_sel == "both") {
        auto hs = build_matrices(spec);
        frobaut::Nat counted = hs.size() == 1 ? frobaut::count_normalizer_bruteforce(hs[0], limit)
                                              : frobaut::count_normalizer_joint(hs, limit);
        bool match = counted == report.normalizer_order;
        all_match = all_match && match;
        doc["verification"].push_back({{"oracle", "normalizer"},
                                       {"formula", report.normalizer_order.str()},
                                       {"oracle_value", counted.str()},
                                       {"match", match}});
    }
    if (oracle_sel == "aut" || oracle_sel == "both") {
        auto g = frobaut::build_group(spec);
        auto gens = frobaut::find_generating_set(g);
        frobaut::Nat counted =
            frobaut::count_automorphisms_bruteforce(g, gens, static_cast<double>(limit) * limit);
        bool match = counted == report.aut_order;
        all_match = all_match && match;
        doc["verification"].push_back({{"oracle", "aut"},
                                       {"formula", report.aut_order.str()},
                                       {"oracle_value", counted.str()},
                                       {"match", match}});
    }
    std::cout << doc.dump(2) << "\n";
    return all_match ? kExitOk : kExitMismatch;
}

int run_sweep(std::int64_t p, const std::vector<std::int64_t>& ns, std::int64_t max_d) {
    for (auto n : ns) {
        if (n < 2 || std::gcd(p, n) != 1) {
            std::cerr << "skip n=" << n << ": gcd(p,n) != 1 or n < 2\n";
            continue;
        }
        for (const auto& spec : frobaut::enumerate_sweep_specs(p, n, max_d)) {
            try {
                auto report = frobaut::analyze(spec);
                std::cout << frobaut::report_document(report).dump() << "\n";
            } catch (const frobaut::ValidationError& e) {
                std::cerr << "skip spec (n=" << n << "): " << e.what() << "\n";
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphism groups of Frobenius groups (prod C_p^d) : C_n"};
    app.require_subcommand(1);
    bool seed_free = false;
    app.add_flag("--seed-free", seed_free,
                 "assert that no algorithm consults randomness (always holds)");

    std::string spec_path;
    bool json_out = false, text_out = false;
    auto* analyze = app.add_subcommand("analyze", "compute the automorphism group report");
    analyze->add_option("spec", spec_path, "spec JSON file")->required();
    analyze->add_flag("--json", json_out, "JSON output");
    analyze->add_flag("--text", text_out, "text output (default)");

    std::string verify_path, oracle_sel = "both";
    std::uint64_t limit = std::uint64_t(1) << 26;
    auto* verify = app.add_subcommand("verify", "cross-check the formulas with brute force");
    verify->add_option("spec", verify_path, "spec JSON file")->required();
    verify->add_option("--oracle", oracle_sel, "normalizer|aut|both")
        ->check(CLI::IsMember({"normalizer", "aut", "both"}));
    verify->add_option("--limit", limit, "oracle work bound");

    std::int64_t sweep_p = 0, max_d = 0;
    std::string n_list;
    bool sweep_json = true;
    auto* sweep = app.add_subcommand("sweep", "enumerate and analyze canonical specs");
    sweep->add_option("--p", sweep_p, "kernel prime")->required();
    sweep->add_option("--n", n_list, "complement order(s), comma separated")->required();
    sweep->add_option("--max-d", max_d, "maximum kernel dimension")->required();
    sweep->add_flag("--json", sweep_json, "JSON-lines output (default)");

    CLI11_PARSE(app, argc, argv);
    if (seed_free) frobaut::forbid_rng();

    try {
        if (*analyze) return run_analyze(spec_path, json_out && !text_out);
        if (*verify) return run_verify(verify_path, oracle_sel, limit);
        if (*sweep) {
            std::vector<std::int64_t> ns;
            std::stringstream ss(n_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) ns.push_back(std::stoll(tok));
            return run_sweep(sweep_p, ns, max_d);
        }
    } catch (const frobaut::OracleBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const frobaut::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
