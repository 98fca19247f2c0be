#pragma once

#include <stdexcept>

namespace frobaut {

/// Every algorithm in this library is deterministic. Any future code path
/// that wants randomness must call request_rng() first; with the guard armed
/// (CLI flag --seed-free) that call throws instead.
void forbid_rng();
bool rng_forbidden();
void request_rng();

}  // namespace frobaut
