#pragma once

#include "frobaut/repdecomp.hpp"

#include <cstdint>
#include <vector>

namespace frobaut {

/// All canonical single-prime specs for (p, n) with total dimension <= max_d:
/// every multiset of faithful cyclotomic classes with multiplicities,
/// deduplicated under global unit scaling (which yields isomorphic groups).
/// Returns an empty list when gcd(p, n) != 1 or no class fits the bound.
std::vector<KernelActionSpec> enumerate_sweep_specs(std::int64_t p, std::int64_t n,
                                                    std::int64_t max_d);

}  // namespace frobaut
