#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobaut {

/// Input that fails the Frobenius/structural preconditions.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Constituent {
    std::int64_t r;
    std::int64_t e;
    bool operator==(const Constituent&) const = default;
};

struct PrimeComponentSpec {
    std::int64_t p;
    std::vector<Constituent> constituents;
    bool operator==(const PrimeComponentSpec&) const = default;
};

/// Symbolic description of G = (prod C_{p_i}^{d_i}) : C_n via the exponent
/// classes of the complement generator on each kernel component.
struct KernelActionSpec {
    std::int64_t n;
    std::vector<PrimeComponentSpec> components;
    bool operator==(const KernelActionSpec&) const = default;
};

/// Orbit of a unit residue r under multiplication by p mod n. Identifies an
/// irreducible faithful F_pH-module.
struct CyclotomicClass {
    std::int64_t n;
    std::int64_t p;
    std::int64_t rep;                    // minimal element
    std::vector<std::int64_t> elements;  // sorted
    bool operator==(const CyclotomicClass&) const = default;
};

/// Isotypic decomposition of one prime component: distinct classes with
/// multiplicities, sorted by representative.
struct DecompositionData {
    std::int64_t p;
    std::int64_t n;
    std::int64_t f;  // ord_n(p), the common class size / module dimension
    std::int64_t d;  // f * sum of multiplicities
    std::vector<std::pair<CyclotomicClass, std::int64_t>> classes;
    std::vector<std::string> notes;  // canonicalization notes (merges etc.)
};

CyclotomicClass canonical_class(std::int64_t r, std::int64_t p, std::int64_t n);

std::vector<DecompositionData> validate_and_decompose(const KernelActionSpec& spec);

/// True iff the component has exactly one class.
bool is_homogeneous(const DecompositionData& data);

}  // namespace frobaut
