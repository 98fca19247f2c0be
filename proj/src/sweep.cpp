#include "frobaut/sweep.hpp"

#include "frobaut/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace frobaut {

namespace {

using ClassMultiset = std::vector<std::pair<std::int64_t, std::int64_t>>;  // (rep, e), sorted

ClassMultiset scale_by_unit(const ClassMultiset& ms, std::int64_t u, std::int64_t p,
                            std::int64_t n) {
    ClassMultiset out;
    for (auto [rep, e] : ms) {
        std::int64_t image = static_cast<std::int64_t>(
            static_cast<unsigned __int128>(u) * rep % static_cast<unsigned __int128>(n));
        out.emplace_back(canonical_class(image, p, n).rep, e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_unit_canonical(const ClassMultiset& ms, std::int64_t p, std::int64_t n) {
    for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        if (scale_by_unit(ms, u, p, n) < ms) return false;
    }
    return true;
}

}  // namespace

std::vector<KernelActionSpec> enumerate_sweep_specs(std::int64_t p, std::int64_t n,
                                                    std::int64_t max_d) {
    std::vector<KernelActionSpec> out;
    if (n < 2 || std::gcd(p, n) != 1) return out;
    std::int64_t f = mul_order(p, n);
    if (f > max_d) return out;

    // Distinct faithful classes, sorted by representative.
    std::set<std::int64_t> reps;
    for (std::int64_t r = 1; r < n; ++r)
        if (std::gcd(r, n) == 1) reps.insert(canonical_class(r, p, n).rep);
    std::vector<std::int64_t> rep_list(reps.begin(), reps.end());

    std::int64_t max_sum = max_d / f;  // total multiplicity budget
    std::vector<std::int64_t> mult(rep_list.size(), 0);

    auto emit = [&]() {
        ClassMultiset ms;
        for (size_t i = 0; i < rep_list.size(); ++i)
            if (mult[i] > 0) ms.emplace_back(rep_list[i], mult[i]);
        if (ms.empty() || !is_unit_canonical(ms, p, n)) return;
        KernelActionSpec spec;
        spec.n = n;
        PrimeComponentSpec comp;
        comp.p = p;
        for (auto [rep, e] : ms) comp.constituents.push_back(Constituent{rep, e});
        spec.components.push_back(std::move(comp));
        out.push_back(std::move(spec));
    };

    auto rec = [&](auto&& self, size_t i, std::int64_t budget) -> void {
        if (i == rep_list.size()) {
            emit();
            return;
        }
        for (std::int64_t e = 0; e <= budget; ++e) {
            mult[i] = e;
            self(self, i + 1, budget - e);
        }
        mult[i] = 0;
    };
    rec(rec, 0, max_sum);
    return out;
}

}  // namespace frobaut
