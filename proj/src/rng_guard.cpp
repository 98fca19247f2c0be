#include "frobaut/rng_guard.hpp"

#include <atomic>

namespace frobaut {

namespace {
std::atomic<bool> g_forbidden{false};
}

void forbid_rng() { g_forbidden.store(true); }
bool rng_forbidden() { return g_forbidden.load(); }

void request_rng() {
    if (g_forbidden.load())
        throw std::logic_error("randomness requested while --seed-free is active");
}

}  // namespace frobaut
