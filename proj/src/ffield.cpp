#include "frobaut/ffield.hpp"

#include "frobaut/numtheory.hpp"

#include <algorithm>

namespace frobaut {

namespace {
constexpr std::int64_t kFieldSizeLimit = std::int64_t(1) << 40;

std::int64_t norm_mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}
}  // namespace

PolyFp poly_trim(PolyFp a) {
    while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
    return a;
}

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
    PolyFp r{a.p, {}};
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i)
        r.coeffs[i] = norm_mod(r.coeffs[i] + b.coeffs[i], r.p);
    return poly_trim(std::move(r));
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
    PolyFp nb = b;
    for (auto& c : nb.coeffs) c = norm_mod(-c, b.p);
    nb.p = a.p;
    return poly_add(a, nb);
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() || b.is_zero()) return PolyFp{a.p, {}};
    PolyFp r{a.p, std::vector<std::int64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = norm_mod(r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j], r.p);
    return poly_trim(std::move(r));
}

PolyFp poly_rem(const PolyFp& a, const PolyFp& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    PolyFp r = a;
    std::int64_t p = b.p;
    std::int64_t lead_inv = pow_mod(b.coeffs.back(), p - 2, p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::int64_t shift = r.degree() - b.degree();
        std::int64_t factor = norm_mod(r.coeffs.back() * lead_inv, p);
        for (std::int64_t i = 0; i <= b.degree(); ++i)
            r.coeffs[i + shift] = norm_mod(r.coeffs[i + shift] - factor * b.coeffs[i], p);
        r = poly_trim(std::move(r));
    }
    return r;
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        std::int64_t inv = pow_mod(a.coeffs.back(), a.p - 2, a.p);
        for (auto& c : a.coeffs) c = norm_mod(c * inv, a.p);
    }
    return a;
}

namespace {
PolyFp poly_powmod(PolyFp base, std::int64_t e, const PolyFp& g) {
    PolyFp acc{g.p, {1}};
    base = poly_rem(base, g);
    while (e > 0) {
        if (e & 1) acc = poly_rem(poly_mul(acc, base), g);
        base = poly_rem(poly_mul(base, base), g);
        e >>= 1;
    }
    return acc;
}
}  // namespace

PolyFp poly_xpow_mod(std::int64_t e_base, std::int64_t e_exp, const PolyFp& g) {
    PolyFp t{g.p, {0, 1}};  // x
    t = poly_rem(t, g);
    for (std::int64_t i = 0; i < e_exp; ++i) t = poly_powmod(t, e_base, g);
    return t;
}

bool is_irreducible(const PolyFp& g) {
    // Rabin's test: x^{p^f} = x mod g, and x^{p^{f/q}} - x coprime to g for
    // every prime q dividing f.
    if (g.degree() < 1) return false;
    std::int64_t p = g.p, f = g.degree();
    PolyFp x{p, {0, 1}};
    PolyFp top = poly_xpow_mod(p, f, g);
    if (!(poly_sub(top, poly_rem(x, g)) == PolyFp{p, {}})) return false;
    for (auto [q, e] : factorize(f)) {
        (void)e;
        PolyFp sub = poly_sub(poly_xpow_mod(p, f / q, g), poly_rem(x, g));
        PolyFp d = poly_gcd(g, sub);
        if (d.degree() != 0) return false;
    }
    return true;
}

PolyFp find_irreducible(std::int64_t p, std::int64_t f) {
    if (p < 2 || f < 1) throw std::invalid_argument("bad field parameters");
    // Lower coefficients enumerated as a base-p counter, low digit first.
    std::vector<std::int64_t> low(f, 0);
    for (;;) {
        PolyFp g{p, low};
        g.coeffs.resize(f, 0);
        g.coeffs.push_back(1);
        if (is_irreducible(g)) return g;
        std::int64_t i = 0;
        while (i < f && ++low[i] == p) low[i++] = 0;
        if (i == f) throw std::logic_error("no irreducible polynomial found (bug)");
    }
}

std::shared_ptr<const Field> make_field(std::int64_t p, std::int64_t f) {
    std::int64_t size = 1;
    for (std::int64_t i = 0; i < f; ++i) {
        if (size > kFieldSizeLimit / p) throw std::invalid_argument("field too large");
        size *= p;
    }
    auto fld = std::make_shared<Field>();
    fld->p = p;
    fld->f = f;
    fld->modulus = find_irreducible(p, f);
    fld->size = size;
    return fld;
}

bool FFElem::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

bool FFElem::operator==(const FFElem& o) const {
    if (field.get() != o.field.get()) throw std::invalid_argument("mixed-field comparison");
    return coords == o.coords;
}

FFElem ff_zero(std::shared_ptr<const Field> fld) {
    return FFElem{fld, std::vector<std::int64_t>(fld->f, 0)};
}

FFElem ff_one(std::shared_ptr<const Field> fld) { return ff_from_int(fld, 1); }

FFElem ff_from_int(std::shared_ptr<const Field> fld, std::int64_t c) {
    FFElem e = ff_zero(fld);
    e.coords[0] = norm_mod(c, fld->p);
    return e;
}

FFElem ff_add(const FFElem& a, const FFElem& b) {
    if (a.field.get() != b.field.get()) throw std::invalid_argument("mixed-field arithmetic");
    FFElem r = a;
    for (std::int64_t i = 0; i < a.field->f; ++i)
        r.coords[i] = norm_mod(r.coords[i] + b.coords[i], a.field->p);
    return r;
}

FFElem ff_mul(const FFElem& a, const FFElem& b) {
    if (a.field.get() != b.field.get()) throw std::invalid_argument("mixed-field arithmetic");
    PolyFp pa{a.field->p, a.coords}, pb{b.field->p, b.coords};
    PolyFp prod = poly_rem(poly_mul(poly_trim(pa), poly_trim(pb)), a.field->modulus);
    FFElem r = ff_zero(a.field);
    for (size_t i = 0; i < prod.coeffs.size(); ++i) r.coords[i] = prod.coeffs[i];
    return r;
}

FFElem ff_pow(const FFElem& a, std::int64_t e) {
    FFElem acc = ff_one(a.field), base = a;
    while (e > 0) {
        if (e & 1) acc = ff_mul(acc, base);
        base = ff_mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::int64_t ff_order(const FFElem& a) {
    if (a.is_zero()) throw std::invalid_argument("zero has no multiplicative order");
    FFElem x = a;
    std::int64_t m = 1;
    const FFElem one = ff_one(a.field);
    while (!(x == one)) {
        x = ff_mul(x, a);
        ++m;
    }
    return m;
}

FFElem primitive_nth_root(std::shared_ptr<const Field> fld, std::int64_t n) {
    std::int64_t group = fld->size - 1;
    if (n < 1 || group % n != 0) throw std::invalid_argument("no such root");
    std::int64_t exp = group / n;
    auto nfac = factorize(n);
    // Coordinate-lexicographic scan: element index read as base-p digits.
    for (std::int64_t idx = 1; idx < fld->size; ++idx) {
        FFElem x = ff_zero(fld);
        std::int64_t t = idx;
        for (std::int64_t i = 0; i < fld->f; ++i) {
            x.coords[i] = t % fld->p;
            t /= fld->p;
        }
        FFElem y = ff_pow(x, exp);
        if (y.is_zero()) continue;
        bool exact = true;
        for (auto [q, e] : nfac) {
            (void)e;
            if (ff_pow(y, n / q) == ff_one(fld)) { exact = false; break; }
        }
        if (exact && ff_pow(y, n) == ff_one(fld)) return y;
    }
    throw std::logic_error("no element of the requested order (bug)");
}

FFElem primitive_nth_root(std::int64_t p, std::int64_t f, std::int64_t n) {
    return primitive_nth_root(make_field(p, f), n);
}

PolyFp min_poly(const FFElem& a) {
    const auto& fld = a.field;
    std::int64_t p = fld->p;
    // Distinct Frobenius conjugates a, a^p, a^{p^2}, ...
    std::vector<FFElem> conj{a};
    FFElem c = ff_pow(a, p);
    while (!(c == a)) {
        conj.push_back(c);
        c = ff_pow(c, p);
    }
    // prod (x - conj_i), coefficients in the big field.
    std::vector<FFElem> poly{ff_one(fld)};
    for (const auto& root : conj) {
        std::vector<FFElem> next(poly.size() + 1, ff_zero(fld));
        FFElem neg = root;
        for (auto& co : neg.coords) co = norm_mod(-co, p);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ff_add(next[i + 1], poly[i]);       // x * poly
            next[i] = ff_add(next[i], ff_mul(neg, poly[i]));  // -root * poly
        }
        poly = std::move(next);
    }
    PolyFp out{p, {}};
    out.coeffs.reserve(poly.size());
    for (const auto& co : poly) {
        for (std::int64_t i = 1; i < fld->f; ++i)
            if (co.coords[i] != 0) throw std::logic_error("minimal polynomial not over F_p (bug)");
        out.coeffs.push_back(co.coords[0]);
    }
    return poly_trim(std::move(out));
}

std::vector<std::vector<std::int64_t>> mat_identity(std::int64_t d) {
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
    for (std::int64_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::vector<std::int64_t>> mat_mul(const std::vector<std::vector<std::int64_t>>& a,
                                               const std::vector<std::vector<std::int64_t>>& b,
                                               std::int64_t p) {
    std::int64_t d = static_cast<std::int64_t>(a.size());
    std::vector<std::vector<std::int64_t>> r(d, std::vector<std::int64_t>(d, 0));
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t k = 0; k < d; ++k) {
            if (a[i][k] == 0) continue;
            for (std::int64_t j = 0; j < d; ++j)
                r[i][j] = (r[i][j] + a[i][k] * b[k][j]) % p;
        }
    return r;
}

std::int64_t mat_order(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p,
                       std::int64_t max_order) {
    auto id = mat_identity(static_cast<std::int64_t>(m.size()));
    auto x = m;
    for (std::int64_t k = 1; k <= max_order; ++k) {
        if (x == id) return k;
        x = mat_mul(x, m, p);
    }
    throw std::invalid_argument("matrix order exceeds bound");
}

std::vector<std::vector<std::int64_t>> companion_matrix(const PolyFp& g) {
    if (!g.is_monic()) throw std::invalid_argument("companion matrix requires a monic polynomial");
    std::int64_t f = g.degree();
    if (f < 1) throw std::invalid_argument("companion matrix requires degree >= 1");
    std::vector<std::vector<std::int64_t>> m(f, std::vector<std::int64_t>(f, 0));
    for (std::int64_t i = 1; i < f; ++i) m[i][i - 1] = 1;
    for (std::int64_t i = 0; i < f; ++i) m[i][f - 1] = norm_mod(-g.coeffs[i], g.p);
    return m;
}

HMatrix build_h_matrix(std::int64_t p, std::int64_t n,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& classes) {
    if (n < 2) throw std::invalid_argument("complement must be nontrivial");
    std::int64_t f = mul_order(p, n);
    auto fld = make_field(p, f);
    FFElem omega = primitive_nth_root(fld, n);

    std::vector<std::vector<std::vector<std::int64_t>>> blocks;
    std::int64_t d = 0;
    for (auto [r, e] : classes) {
        PolyFp mp = min_poly(ff_pow(omega, r));
        if (mp.degree() != f) throw std::logic_error("faithful class with short orbit (bug)");
        auto block = companion_matrix(mp);
        for (std::int64_t i = 0; i < e; ++i) {
            blocks.push_back(block);
            d += f;
        }
    }
    HMatrix h;
    h.p = p;
    h.d = d;
    h.n = n;
    h.entries.assign(d, std::vector<std::int64_t>(d, 0));
    std::int64_t off = 0;
    for (const auto& b : blocks) {
        std::int64_t bd = static_cast<std::int64_t>(b.size());
        for (std::int64_t i = 0; i < bd; ++i)
            for (std::int64_t j = 0; j < bd; ++j) h.entries[off + i][off + j] = b[i][j];
        off += bd;
    }
    if (mat_order(h.entries, p, n) != n) throw std::logic_error("h matrix has wrong order (bug)");
    return h;
}

}  // namespace frobaut
