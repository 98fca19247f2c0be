#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace frobaut {

/// Polynomial over F_p, coefficients lowest degree first, trailing zeros
/// stripped. The zero polynomial has an empty coefficient vector.
struct PolyFp {
    std::int64_t p = 0;
    std::vector<std::int64_t> coeffs;

    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    bool operator==(const PolyFp&) const = default;
};

PolyFp poly_trim(PolyFp a);
PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
PolyFp poly_rem(const PolyFp& a, const PolyFp& b);
PolyFp poly_gcd(PolyFp a, PolyFp b);
/// x^e mod g.
PolyFp poly_xpow_mod(std::int64_t e_base, std::int64_t e_exp, const PolyFp& g);

/// Descriptor of F_{p^f} = F_p[x]/(g), g irreducible monic of degree f.
struct Field {
    std::int64_t p;
    std::int64_t f;
    PolyFp modulus;
    std::int64_t size;  // p^f; construction rejects fields past the 2^62 guard
};

/// Element of a constructed field. Elements of different field descriptors
/// never mix; arithmetic on mismatched fields throws.
struct FFElem {
    std::shared_ptr<const Field> field;
    std::vector<std::int64_t> coords;  // length f, base-p digits, low first

    bool is_zero() const;
    bool operator==(const FFElem& o) const;
};

std::shared_ptr<const Field> make_field(std::int64_t p, std::int64_t f);

FFElem ff_zero(std::shared_ptr<const Field> fld);
FFElem ff_one(std::shared_ptr<const Field> fld);
FFElem ff_from_int(std::shared_ptr<const Field> fld, std::int64_t c);
FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_pow(const FFElem& a, std::int64_t e);
/// Multiplicative order; a must be nonzero.
std::int64_t ff_order(const FFElem& a);

/// Lexicographically smallest monic irreducible of degree f over F_p
/// (coefficients compared low-to-high as base-p digits).
PolyFp find_irreducible(std::int64_t p, std::int64_t f);

bool is_irreducible(const PolyFp& g);

/// Element of multiplicative order exactly n in F_{p^f}; deterministic
/// coordinate-lexicographic scan. Throws "no such root" if n does not divide
/// p^f - 1.
FFElem primitive_nth_root(std::int64_t p, std::int64_t f, std::int64_t n);
FFElem primitive_nth_root(std::shared_ptr<const Field> fld, std::int64_t n);

/// Monic minimal polynomial of a over the prime field:
/// prod (x - a^{p^j}) over the distinct Frobenius conjugates.
PolyFp min_poly(const FFElem& a);

/// Square matrix over F_p with a known multiplicative order.
struct HMatrix {
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::vector<std::vector<std::int64_t>> entries;  // row major
};

std::vector<std::vector<std::int64_t>> mat_mul(const std::vector<std::vector<std::int64_t>>& a,
                                               const std::vector<std::vector<std::int64_t>>& b,
                                               std::int64_t p);
std::vector<std::vector<std::int64_t>> mat_identity(std::int64_t d);
std::int64_t mat_order(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p,
                       std::int64_t max_order);

/// Companion matrix of a monic polynomial: 1s on the subdiagonal, negated
/// coefficients in the last column; acts on column vectors.
std::vector<std::vector<std::int64_t>> companion_matrix(const PolyFp& g);

/// Block-diagonal generator matrix of h in GL(d, p): for each class (r, e),
/// e companion blocks of min_poly(w^r) with w of order n in F_{p^f}.
HMatrix build_h_matrix(std::int64_t p, std::int64_t n,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& classes);

}  // namespace frobaut
