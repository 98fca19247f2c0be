#include "frobaut/repdecomp.hpp"

#include "frobaut/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace frobaut {

CyclotomicClass canonical_class(std::int64_t r, std::int64_t p, std::int64_t n) {
    if (n < 2) throw ValidationError("complement must be nontrivial");
    r %= n;
    if (r < 0) r += n;
    if (std::gcd(p, n) != 1) throw ValidationError("p divides n");
    if (std::gcd(r, n) != 1)
        throw ValidationError("constituent not faithful: Frobenius condition fails");
    std::set<std::int64_t> orbit;
    std::int64_t x = r;
    do {
        orbit.insert(x);
        x = static_cast<std::int64_t>(
            static_cast<unsigned __int128>(x) * (p % n) % static_cast<unsigned __int128>(n));
    } while (x != r);
    CyclotomicClass c;
    c.n = n;
    c.p = p;
    c.elements.assign(orbit.begin(), orbit.end());
    c.rep = c.elements.front();
    return c;
}

std::vector<DecompositionData> validate_and_decompose(const KernelActionSpec& spec) {
    if (spec.n < 2) throw ValidationError("complement must be nontrivial");
    if (spec.components.empty()) throw ValidationError("kernel must have at least one component");

    std::set<std::int64_t> seen_primes;
    std::vector<DecompositionData> out;
    for (const auto& comp : spec.components) {
        if (comp.p < 2 ||
            factorize(comp.p) != std::vector<std::pair<std::int64_t, std::int64_t>>{{comp.p, 1}})
            throw ValidationError("component modulus " + std::to_string(comp.p) + " is not prime");
        if (!seen_primes.insert(comp.p).second)
            throw ValidationError("duplicate prime " + std::to_string(comp.p));
        if (std::gcd(comp.p, spec.n) != 1)
            throw ValidationError("p divides n");
        if (comp.constituents.empty())
            throw ValidationError("component p=" + std::to_string(comp.p) +
                                  " has no constituents");

        DecompositionData data;
        data.p = comp.p;
        data.n = spec.n;
        data.f = mul_order(comp.p, spec.n);

        std::map<std::int64_t, std::pair<CyclotomicClass, std::int64_t>> merged;
        for (const auto& cst : comp.constituents) {
            if (cst.e < 1) throw ValidationError("multiplicity must be >= 1");
            std::int64_t r = cst.r % spec.n;
            if (r < 0) r += spec.n;
            if (std::gcd(r, spec.n) != 1)
                throw ValidationError("constituent not faithful: Frobenius condition fails (r=" +
                                      std::to_string(cst.r) + ", p=" + std::to_string(comp.p) +
                                      ")");
            CyclotomicClass cls = canonical_class(r, comp.p, spec.n);
            auto it = merged.find(cls.rep);
            if (it == merged.end()) {
                merged.emplace(cls.rep, std::make_pair(std::move(cls), cst.e));
            } else {
                it->second.second += cst.e;
                data.notes.push_back("p=" + std::to_string(comp.p) + ": constituent r=" +
                                     std::to_string(cst.r) + " merged into class of " +
                                     std::to_string(cls.rep));
            }
        }
        std::int64_t sum_e = 0;
        for (auto& [rep, ce] : merged) {
            sum_e += ce.second;
            data.classes.emplace_back(std::move(ce.first), ce.second);
        }
        data.d = data.f * sum_e;
        out.push_back(std::move(data));
    }
    std::sort(out.begin(), out.end(),
              [](const DecompositionData& a, const DecompositionData& b) { return a.p < b.p; });
    return out;
}

bool is_homogeneous(const DecompositionData& data) { return data.classes.size() == 1; }

}  // namespace frobaut
