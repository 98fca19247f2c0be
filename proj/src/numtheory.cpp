#include "frobaut/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace frobaut {

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    if (n == 1) return 0;
    a %= n;
    if (a < 0) a += n;
    // 128-bit intermediate keeps n up to ~2^62 safe.
    unsigned __int128 acc = 1, base = static_cast<unsigned __int128>(a);
    while (e > 0) {
        if (e & 1) acc = acc * base % static_cast<unsigned __int128>(n);
        base = base * base % static_cast<unsigned __int128>(n);
        e >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t mul_order(std::int64_t a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    a %= n;
    if (a < 0) a += n;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("not a unit");
    if (n == 1) return 1;
    std::int64_t x = a % n, m = 1;
    while (x != 1) {
        x = static_cast<std::int64_t>(
            static_cast<unsigned __int128>(x) * a % static_cast<unsigned __int128>(n));
        ++m;
    }
    return m;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    auto strip = [&](std::int64_t p) {
        std::int64_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 2/3 wheel: candidates 5, 7, 11, 13, ...
    for (std::int64_t p = 5, step = 2; p * p <= n; p += step, step = 6 - step)
        strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        std::int64_t pe = p;
        for (std::int64_t i = 1; i < e; ++i) pe *= p;
        phi *= pe - pe / p;
    }
    return phi;
}

std::vector<std::int64_t> cyclic_subgroup(std::int64_t a, std::int64_t n) {
    a %= n;
    if (a < 0) a += n;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("not a unit");
    std::vector<std::int64_t> elems;
    std::int64_t x = 1 % n;
    do {
        elems.push_back(x);
        x = static_cast<std::int64_t>(
            static_cast<unsigned __int128>(x) * a % static_cast<unsigned __int128>(n));
    } while (x != 1 % n);
    std::sort(elems.begin(), elems.end());
    return elems;
}

Nat gl_order(std::int64_t e, std::int64_t p, std::int64_t f) {
    if (e < 1 || p < 2 || f < 1) throw std::invalid_argument("bad GL parameters");
    Nat q = 1;
    for (std::int64_t i = 0; i < f; ++i) q *= p;
    Nat qe = 1;
    for (std::int64_t i = 0; i < e; ++i) qe *= q;
    Nat order = 1, qi = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        order *= qe - qi;
        qi *= q;
    }
    return order;
}

namespace {

// Multiset of element orders, as a map order -> count.
std::map<std::int64_t, std::int64_t> order_profile(const std::vector<std::int64_t>& elems,
                                                   std::int64_t n) {
    std::map<std::int64_t, std::int64_t> prof;
    for (auto a : elems) ++prof[mul_order(a, n)];
    return prof;
}

// Order profile of C_{d_1} x ... x C_{d_k}: count of elements of order
// dividing m is prod gcd(d_i, m); recover exact-order counts by Moebius-style
// subtraction over divisors.
std::map<std::int64_t, std::int64_t> chain_profile(const std::vector<std::int64_t>& chain) {
    std::int64_t expn = chain.empty() ? 1 : chain.back();
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d * d <= expn; ++d)
        if (expn % d == 0) {
            divisors.push_back(d);
            if (d != expn / d) divisors.push_back(expn / d);
        }
    std::sort(divisors.begin(), divisors.end());
    std::map<std::int64_t, std::int64_t> dividing, exact;
    for (auto m : divisors) {
        std::int64_t cnt = 1;
        for (auto d : chain) cnt *= std::gcd(d, m);
        dividing[m] = cnt;
    }
    for (auto m : divisors) {
        std::int64_t cnt = dividing[m];
        for (auto d : divisors) {
            if (d == m) break;
            if (m % d == 0) cnt -= exact[d];
        }
        exact[m] = cnt;
    }
    for (auto it = exact.begin(); it != exact.end();)
        it = it->second == 0 ? exact.erase(it) : std::next(it);
    return exact;
}

bool search_chain(std::int64_t remaining, std::int64_t max_factor,
                  std::vector<std::int64_t>& chain,
                  const std::map<std::int64_t, std::int64_t>& target) {
    if (remaining == 1) {
        std::vector<std::int64_t> full(chain.rbegin(), chain.rend());
        return chain_profile(full) == target;
    }
    // Factors are chosen largest-first so each divides its predecessor.
    for (std::int64_t d = std::min(remaining, max_factor); d >= 2; --d) {
        if (remaining % d != 0) continue;
        chain.push_back(d);
        if (search_chain(remaining / d, d, chain, target)) return true;
        chain.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::int64_t> abelian_invariants(const std::vector<std::int64_t>& elements,
                                             std::int64_t n) {
    if (elements.empty()) throw std::invalid_argument("not a subgroup");
    std::vector<std::int64_t> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    for (auto a : sorted)
        for (auto b : sorted) {
            std::int64_t ab = static_cast<std::int64_t>(
                static_cast<unsigned __int128>(a) * b % static_cast<unsigned __int128>(n));
            if (!std::binary_search(sorted.begin(), sorted.end(), ab))
                throw std::invalid_argument("not a subgroup");
        }
    std::int64_t size = static_cast<std::int64_t>(sorted.size());
    if (size == 1) return {};
    auto target = order_profile(sorted, n);
    std::int64_t expn = target.rbegin()->first;  // max element order = exponent
    // The largest invariant factor equals the exponent; brute-force the rest.
    std::vector<std::int64_t> chain{expn};
    if (search_chain(size / expn, expn, chain, target)) {
        std::vector<std::int64_t> full(chain.rbegin(), chain.rend());
        return full;
    }
    throw std::logic_error("no invariant-factor chain matches (bug)");
}

}  // namespace frobaut
