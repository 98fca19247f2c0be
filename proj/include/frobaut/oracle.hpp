#pragma once

#include "frobaut/ffield.hpp"
#include "frobaut/numtheory.hpp"
#include "frobaut/repdecomp.hpp"

#include <cstdint>
#include <vector>

namespace frobaut {

/// Instance exceeds the oracle's hard work bound. Oracles never sample.
class OracleBoundError : public std::runtime_error {
  public:
    OracleBoundError() : std::runtime_error("instance too large for oracle") {}
};

/// Explicit element table of G = V:H with multiplication
/// (v1,k1)*(v2,k2) = (v1 + h^{k1} v2, k1+k2 mod n).
struct ExplicitGroup {
    std::int64_t n = 0;
    std::int64_t order = 0;          // |G|
    std::int64_t kernel_size = 0;    // |V|
    std::vector<std::int64_t> moduli;  // prime per kernel coordinate
    // h^k restricted to each component, k = 0..n-1.
    std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> h_pows;
    std::vector<std::int64_t> comp_offset;  // coordinate offset per component
    std::vector<std::int64_t> comp_prime;

    std::int64_t size() const { return order; }
    std::int64_t identity() const { return 0; }
    std::int64_t mult(std::int64_t a, std::int64_t b) const;
    std::int64_t element_order(std::int64_t a) const;
    /// Encode (v, k) to an element index; v in coordinate order.
    std::int64_t encode(const std::vector<std::int64_t>& v, std::int64_t k) const;
    void decode(std::int64_t idx, std::vector<std::int64_t>& v, std::int64_t& k) const;
};

struct GeneratingSet {
    std::vector<std::int64_t> elements;  // indices into the group
};

/// Exact |N_{GL(d,p)}(<h>)| by full enumeration of d x d matrices in
/// row-major base-p counter order, invertibility pruned by incremental row
/// reduction. Requires p^{d^2} <= limit.
Nat count_normalizer_bruteforce(const HMatrix& h, std::uint64_t limit = std::uint64_t(1) << 26);

/// Same loop with the membership test replaced by equality against h itself.
Nat count_centralizer_bruteforce(const HMatrix& h, std::uint64_t limit = std::uint64_t(1) << 26);

/// Exact |N_{GL(d,p)}(<h>)| by a second route: for each unit lambda mod n,
/// enumerate the solution space of A h = h^lambda A and count invertible
/// solutions. Still exhaustive over every candidate, but feasible for larger d.
Nat count_normalizer_linear(const HMatrix& h, std::uint64_t limit = std::uint64_t(1) << 26);

/// Count of invertible A over F_p with A h = h^lambda A (one conjugacy slice).
Nat count_conjugating_matrices(const HMatrix& h, std::int64_t lambda,
                               std::uint64_t limit = std::uint64_t(1) << 26);

/// Joint normalizer count over Aut(V) = prod GL(d_i, p_i) for a multi-prime
/// kernel: sum over units lambda of the product of per-component slice counts.
Nat count_normalizer_joint(const std::vector<HMatrix>& hs,
                           std::uint64_t limit = std::uint64_t(1) << 26);

/// Builds the explicit group and verifies the Frobenius property directly.
ExplicitGroup build_group(const KernelActionSpec& spec, std::int64_t max_order = 10000);

/// Greedy generating set: complement generator first, then kernel vectors by
/// smallest encoding until the closure is the whole group.
GeneratingSet find_generating_set(const ExplicitGroup& g);

/// Exact |Aut(G)| by enumerating all generator-image assignments and testing
/// each for extension to a bijective homomorphism via the canonical word table.
Nat count_automorphisms_bruteforce(const ExplicitGroup& g, const GeneratingSet& gens,
                                   double limit = 4294967296.0);

/// True iff det(h^k - I) != 0 mod p for all 0 < k < n.
bool frobenius_check_matrix(const HMatrix& h);

/// Determinant mod p.
std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p);

}  // namespace frobaut
