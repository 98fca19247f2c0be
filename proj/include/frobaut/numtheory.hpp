#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobaut {

/// Arbitrary-precision natural number. Group orders outgrow 64 bits quickly
/// (|GL(4,31)| already does), so every order computation uses this type.
using Nat = boost::multiprecision::cpp_int;

/// a^e mod n with 0 <= result < n. Requires n >= 1.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t n);

/// Least m >= 1 with a^m = 1 (mod n). Throws std::invalid_argument("not a unit")
/// if gcd(a, n) != 1.
std::int64_t mul_order(std::int64_t a, std::int64_t n);

/// Euler's totient, via trial-division factorization.
std::int64_t euler_phi(std::int64_t n);

/// Prime factorization of n >= 1, primes strictly increasing. factorize(1) = {}.
std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t n);

/// All powers of the unit a mod n, sorted ascending. Length = mul_order(a, n).
std::vector<std::int64_t> cyclic_subgroup(std::int64_t a, std::int64_t n);

/// |GL(e, q)| = prod_{i=0}^{e-1} (q^e - q^i), q = p^f, exact.
Nat gl_order(std::int64_t e, std::int64_t p, std::int64_t f);

/// Invariant factors d_1 | d_2 | ... | d_k of a subgroup of (Z/n)^*, with
/// prod d_i = |subgroup|. The empty chain is returned for the trivial group.
/// Throws std::invalid_argument("not a subgroup") if the element set is not
/// closed under multiplication mod n.
std::vector<std::int64_t> abelian_invariants(const std::vector<std::int64_t>& elements,
                                             std::int64_t n);

}  // namespace frobaut
