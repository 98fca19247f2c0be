#pragma once

#include "frobaut/numtheory.hpp"
#include "frobaut/repdecomp.hpp"

#include <string>
#include <vector>

namespace frobaut {

/// Subgroup Lambda of (Z/n)^* of complement automorphisms that preserve the
/// class multiset of every kernel component. Composite of the field
/// automorphisms and the class-permuting part.
struct StabilizerSubgroup {
    std::int64_t n = 0;
    std::vector<std::int64_t> elements;  // sorted, contains 1
    std::int64_t order = 0;
    std::vector<std::int64_t> invariants;  // invariant factors
};

/// How Lambda fuses the classes of one prime component into M-irreducibles.
struct FusionData {
    std::int64_t ell = 0;              // classes per M-irreducible
    std::int64_t s = 0;                // number of M-irreducibles
    std::int64_t field_auto_order = 0; // |Lambda ∩ <p>|
    std::vector<std::vector<std::int64_t>> orbits;  // class indices, per orbit
    std::vector<std::int64_t> e_per_orbit;
};

struct ComponentReport {
    DecompositionData data;
    FusionData fusion;
    Nat centralizer_order;
    bool homogeneous = false;
    bool m_irreducible = false;  // s == 1
};

struct AutReport {
    KernelActionSpec spec;
    std::vector<ComponentReport> components;
    StabilizerSubgroup stabilizer;
    Nat centralizer_order;  // product over all components
    Nat normalizer_order;   // |M| = centralizer * |Lambda|
    Nat kernel_order;       // prod p_i^{d_i}
    Nat aut_order;          // kernel * normalizer
    std::string structure;
    std::vector<std::string> notes;
};

StabilizerSubgroup component_stabilizer(const DecompositionData& data);

StabilizerSubgroup global_stabilizer(const std::vector<DecompositionData>& components);

FusionData fusion(const StabilizerSubgroup& lambda, const DecompositionData& data);

Nat centralizer_order(const DecompositionData& data);

Nat normalizer_order(const std::vector<DecompositionData>& components,
                     const StabilizerSubgroup& lambda);

Nat aut_order(const KernelActionSpec& spec);

AutReport analyze(const KernelActionSpec& spec);

std::string structure_string(const AutReport& report);

/// Structural-bound report for prime-power complement order n = q^m,
/// single-prime kernel. Asserts the cyclicity/embedding bounds and renders
/// them as text. Throws ValidationError("not applicable") otherwise.
std::string prime_power_complement_report(const KernelActionSpec& spec);

}  // namespace frobaut
