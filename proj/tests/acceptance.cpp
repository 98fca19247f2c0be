// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include "frobaut/autstruct.hpp"
#include "frobaut/oracle.hpp"
#include "frobaut/report.hpp"
#include "frobaut/sweep.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

using namespace frobaut;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report_line(int criterion, const char* name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

HMatrix matrix_for(const KernelActionSpec& spec) {
    auto decs = validate_and_decompose(spec);
    std::vector<std::pair<std::int64_t, std::int64_t>> classes;
    for (const auto& [cls, e] : decs[0].classes) classes.emplace_back(cls.rep, e);
    return build_h_matrix(decs[0].p, decs[0].n, classes);
}

// --- criterion 1: the three worked 4-dimensional cases over F_31 -------------

void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;

    auto rep1 = analyze({15, {{31, {{1, 4}}}}});
    ok = ok && rep1.components.size() == 1 && rep1.components[0].homogeneous;
    ok = ok && rep1.structure == "C_31^4 : GL(4,31)";
    ok = ok && rep1.normalizer_order == gl_order(4, 31, 1);

    auto rep2 = analyze({15, {{31, {{1, 1}, {4, 1}, {11, 1}, {14, 1}}}}});
    ok = ok && rep2.stabilizer.elements == std::vector<std::int64_t>{1, 4, 11, 14};
    ok = ok && rep2.stabilizer.invariants == std::vector<std::int64_t>{2, 2};
    ok = ok && rep2.normalizer_order == 3'240'000;
    ok = ok && rep2.structure == "C_31^4 : ((GL(1,31)^4) . [C2 x C2])";

    auto rep3 = analyze({15, {{31, {{1, 1}, {7, 1}, {4, 1}, {13, 1}}}}});
    ok = ok && rep3.stabilizer.elements == std::vector<std::int64_t>{1, 4, 7, 13};
    ok = ok && rep3.stabilizer.invariants == std::vector<std::int64_t>{4};
    ok = ok && rep3.normalizer_order == 3'240'000;
    ok = ok && rep3.structure == "C_31^4 : ((GL(1,31)^4) . [C4])";

    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    detail << "three cases, " << dt << " s";
    report_line(1, "worked 4-dimensional examples over F_31", ok, detail.str());
}

// --- criterion 2: normalizer formula vs brute-force oracles ------------------

void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    int checked = 0;

    const std::vector<KernelActionSpec> enumerable = {
        {2, {{3, {{1, 1}}}}},          // p=3, n=2, d=1
        {3, {{2, {{1, 1}}}}},          // p=2, n=3, d=2
        {3, {{2, {{1, 2}}}}},          // p=2, n=3, d=4 (e=2)
        {4, {{5, {{1, 1}}}}},          // p=5, n=4, d=1
        {3, {{7, {{1, 1}}}}},          // p=7, n=3, d=1
        {6, {{7, {{1, 1}}}}},          // p=7, n=6, d=1
        {5, {{2, {{1, 1}}}}},          // p=2, n=5, d=4
        {7, {{2, {{1, 1}}}}},          // p=2, n=7, d=3
        {8, {{3, {{1, 1}}}}},          // p=3, n=8, d=2
        {15, {{2, {{1, 1}}}}},         // p=2, n=15, d=4
    };
    for (const auto& spec : enumerable) {
        auto formula = analyze(spec).normalizer_order;
        auto counted = count_normalizer_bruteforce(matrix_for(spec));
        if (formula != counted) {
            ok = false;
            detail << " mismatch at n=" << spec.n << " p=" << spec.components[0].p << ";";
        }
        ++checked;
    }

    // p=2, n=7, d=6 (both classes): full matrix enumeration is 2^36 candidates,
    // past the oracle's hard bound, so this instance uses the independent
    // per-eigenvalue-slice brute force instead.
    {
        KernelActionSpec spec{7, {{2, {{1, 1}, {3, 1}}}}};
        auto formula = analyze(spec).normalizer_order;
        auto counted = count_normalizer_linear(matrix_for(spec));
        if (formula != counted) {
            ok = false;
            detail << " mismatch at (2,7,6);";
        }
        ++checked;
    }

    // independently hand-derived spot values
    if (analyze(KernelActionSpec{5, {{2, {{1, 1}}}}}).normalizer_order != 60) ok = false;
    if (analyze(KernelActionSpec{7, {{2, {{1, 1}}}}}).normalizer_order != 21) ok = false;

    double dt = seconds_since(t0);
    ok = ok && dt < 60.0;
    detail << checked << " instances, " << dt << " s";
    report_line(2, "normalizer formula equals brute-force count", ok, detail.str());
}

// --- criterion 3: |Aut(G)| formula vs explicit-group oracle ------------------

void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    int checked = 0;

    const std::vector<KernelActionSpec> specs = {
        {2, {{3, {{1, 1}}}}},   // S_3
        {4, {{5, {{1, 1}}}}},   // C_5 : C_4
        {3, {{7, {{1, 1}}}}},   // C_7 : C_3
        {6, {{7, {{1, 1}}}}},   // C_7 : C_6
        {3, {{2, {{1, 1}}}}},   // A_4
        {5, {{2, {{1, 1}}}}},   // C_2^4 : C_5
        {8, {{3, {{1, 1}}}}},   // C_3^2 : C_8
    };
    for (const auto& spec : specs) {
        auto g = build_group(spec);
        auto counted = count_automorphisms_bruteforce(g, find_generating_set(g));
        if (counted != aut_order(spec)) {
            ok = false;
            detail << " mismatch at n=" << spec.n << " p=" << spec.components[0].p << ";";
        }
        ++checked;
    }

    // absolute anchors
    if (aut_order(KernelActionSpec{2, {{3, {{1, 1}}}}}) != 6) ok = false;
    if (aut_order(KernelActionSpec{3, {{2, {{1, 1}}}}}) != 24) ok = false;

    double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    detail << checked << " groups, " << dt << " s";
    report_line(3, "automorphism formula equals explicit-group count", ok, detail.str());
}

// --- criterion 4: property suites over generated cases -----------------------

std::vector<std::int64_t> primes_coprime_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13})
        if (n % p != 0) out.push_back(p);
    return out;
}

void criterion4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;

    // (a) semiregularity: lambda outside <p> never fixes a faithful class
    std::int64_t semiregular_cases = 0;
    for (std::int64_t n = 2; n <= 200 && semiregular_cases < 20000; ++n) {
        for (auto p : primes_coprime_to(n)) {
            std::set<std::int64_t> ppow;
            for (auto x : cyclic_subgroup(p % n, n)) ppow.insert(x);
            std::set<std::int64_t> seen;
            for (std::int64_t r = 1; r < n; ++r) {
                if (std::gcd(r, n) != 1 || seen.count(r)) continue;
                auto cls = canonical_class(r, p, n);
                for (auto x : cls.elements) seen.insert(x);
                std::set<std::int64_t> members(cls.elements.begin(), cls.elements.end());
                for (std::int64_t lam = 2; lam < n; ++lam) {
                    if (std::gcd(lam, n) != 1 || ppow.count(lam)) continue;
                    bool fixes = true;
                    for (auto x : cls.elements)
                        if (!members.count(lam * x % n)) fixes = false;
                    if (fixes) ok = false;
                    ++semiregular_cases;
                }
            }
        }
    }
    if (semiregular_cases < 500) ok = false;

    // (b)+(c): generated specs; bookkeeping identities and the class-count bound
    std::int64_t generated = 0;
    for (std::int64_t n = 2; n <= 200 && generated < 1500; ++n) {
        for (auto p : primes_coprime_to(n)) {
            std::int64_t f = mul_order(p, n);
            if (f > 16 || euler_phi(n) / f > 12) continue;
            for (const auto& spec : enumerate_sweep_specs(p, n, 3 * f)) {
                auto rep = analyze(spec);
                const auto& comp = rep.components[0];
                const auto& fus = comp.fusion;
                std::int64_t t = static_cast<std::int64_t>(comp.data.classes.size());
                if (fus.ell * fus.field_auto_order != rep.stabilizer.order) ok = false;
                if (fus.s * fus.ell != t) ok = false;
                std::int64_t dim_sum = 0;
                for (auto e : fus.e_per_orbit) dim_sum += e * comp.data.f * fus.ell;
                if (dim_sum != comp.data.d) ok = false;
                if (t > euler_phi(n) / comp.data.f) ok = false;
                ++generated;
            }
        }
    }
    if (generated < 500) ok = false;

    // (d) homogeneous single-prime: normalizer is f * |GL(e, p^f)|
    std::int64_t homogeneous_checked = 0;
    for (std::int64_t n = 2; n <= 200 && homogeneous_checked < 1200; ++n) {
        for (auto p : primes_coprime_to(n)) {
            std::int64_t f = mul_order(p, n);
            if (f > 16) continue;
            std::set<std::int64_t> seen;
            for (std::int64_t r = 1; r < n; ++r) {
                if (std::gcd(r, n) != 1 || seen.count(r)) continue;
                auto cls = canonical_class(r, p, n);
                for (auto x : cls.elements) seen.insert(x);
                for (std::int64_t e = 1; e <= 3; ++e) {
                    auto rep = analyze(KernelActionSpec{n, {{p, {{cls.rep, e}}}}});
                    if (rep.normalizer_order != Nat(f) * gl_order(e, p, f)) ok = false;
                    ++homogeneous_checked;
                }
            }
        }
    }
    if (homogeneous_checked < 500) ok = false;

    // (e) prime-power complement bounds: Lambda cyclic for odd q; inside
    // C_2 x C_{2^{m-2}} for q = 2, m >= 3
    std::int64_t pp_cases = 0;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
        for (std::int64_t n = q; n <= 200; n *= q) {
            for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
                if (n % p == 0 || mul_order(p, n) > 16) continue;
                for (const auto& spec : enumerate_sweep_specs(p, n, 3 * mul_order(p, n))) {
                    try {
                        prime_power_complement_report(spec);
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    ++pp_cases;
                }
            }
        }
    }
    if (pp_cases < 500) ok = false;

    double dt = seconds_since(t0);
    ok = ok && dt < 60.0;
    detail << semiregular_cases << " semiregularity + " << generated << " bookkeeping + "
           << pp_cases << " prime-power cases, " << dt << " s";
    report_line(4, "property suites over generated cases", ok, detail.str());
}

// --- criterion 5: determinism ------------------------------------------------

void criterion5() {
    bool ok = true;
    std::vector<KernelActionSpec> specs = {
        {15, {{31, {{1, 4}}}}},
        {15, {{31, {{1, 1}, {4, 1}, {11, 1}, {14, 1}}}}},
        {15, {{31, {{1, 1}, {7, 1}, {4, 1}, {13, 1}}}}},
        {3, {{2, {{1, 1}}}}},
        {8, {{3, {{1, 1}, {5, 2}}}}},
        {4, {{3, {{1, 1}}}, {5, {{1, 1}, {3, 1}}}}},
    };
    for (std::int64_t n = 2; n <= 40; ++n)
        for (auto p : primes_coprime_to(n))
            for (const auto& s : enumerate_sweep_specs(p, n, 2 * mul_order(p, n)))
                specs.push_back(s);

    std::ostringstream run1, run2;
    for (const auto& s : specs) run1 << report_document(analyze(s), false).dump() << "\n";
    for (const auto& s : specs) run2 << report_document(analyze(s), false).dump() << "\n";
    ok = run1.str() == run2.str() && !run1.str().empty();

    std::ostringstream detail;
    detail << specs.size() << " reports compared byte for byte";
    report_line(5, "repeated runs are byte-identical (timestamp excluded)", ok, detail.str());
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
        return 1;
    }
    return g_failures == 0 ? 0 : 1;
}
