#include "frobaut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace frobaut {

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

bool is_invertible(Mat m, std::int64_t p) {
    std::int64_t d = static_cast<std::int64_t>(m.size());
    for (std::int64_t col = 0; col < d; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t row = col; row < d; ++row)
            if (m[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        std::int64_t inv = pow_mod(m[col][col], p - 2, p);
        for (std::int64_t row = col + 1; row < d; ++row) {
            if (m[row][col] == 0) continue;
            std::int64_t factor = m[row][col] * inv % p;
            for (std::int64_t j = col; j < d; ++j)
                m[row][j] = ((m[row][j] - factor * m[col][j]) % p + p) % p;
        }
    }
    return true;
}

std::vector<Mat> matrix_powers(const HMatrix& h) {
    std::vector<Mat> pows{mat_identity(h.d)};
    for (std::int64_t k = 1; k < h.n; ++k) pows.push_back(mat_mul(pows.back(), h.entries, h.p));
    return pows;
}

// Row-reduced echelon accumulation for the early-exit invertibility check.
struct RowBasis {
    std::int64_t p;
    std::vector<std::vector<std::int64_t>> rows;  // reduced rows
    std::vector<std::int64_t> pivots;

    // Returns false if v is dependent on the rows already present.
    bool try_add(std::vector<std::int64_t> v) {
        std::int64_t d = static_cast<std::int64_t>(v.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            std::int64_t c = v[pivots[i]];
            if (c == 0) continue;
            for (std::int64_t j = 0; j < d; ++j)
                v[j] = ((v[j] - c * rows[i][j]) % p + p) % p;
        }
        std::int64_t piv = -1;
        for (std::int64_t j = 0; j < d; ++j)
            if (v[j] != 0) { piv = j; break; }
        if (piv < 0) return false;
        std::int64_t inv = pow_mod(v[piv], p - 2, p);
        for (auto& c : v) c = c * inv % p;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
    void pop() {
        rows.pop_back();
        pivots.pop_back();
    }
};

// Enumerate invertible matrices row by row (rows counted in base-p, row-major
// overall), pruning as soon as a prefix of rows is linearly dependent.
template <typename Visit>
void enumerate_invertible(std::int64_t p, std::int64_t d, Visit&& visit) {
    Mat a(d, std::vector<std::int64_t>(d, 0));
    RowBasis basis{p, {}, {}};

    auto rec = [&](auto&& self, std::int64_t level) -> void {
        if (level == d) {
            visit(a);
            return;
        }
        std::vector<std::int64_t> row(d, 0);  // per-level counter
        for (;;) {
            if (basis.try_add(row)) {
                a[level] = row;
                self(self, level + 1);
                basis.pop();
            }
            std::int64_t j = d - 1;  // row-major counter: last entry fastest
            while (j >= 0 && ++row[j] == p) row[j--] = 0;
            if (j < 0) break;
        }
    };
    rec(rec, 0);
}

std::uint64_t checked_pow(std::int64_t base, std::int64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > limit / static_cast<std::uint64_t>(base)) return limit + 1;
        r *= static_cast<std::uint64_t>(base);
    }
    return r;
}

}  // namespace

std::int64_t det_mod(Mat m, std::int64_t p) {
    std::int64_t d = static_cast<std::int64_t>(m.size());
    std::int64_t det = 1;
    for (std::int64_t col = 0; col < d; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t row = col; row < d; ++row)
            if (m[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        std::int64_t inv = pow_mod(m[col][col], p - 2, p);
        for (std::int64_t row = col + 1; row < d; ++row) {
            if (m[row][col] == 0) continue;
            std::int64_t factor = m[row][col] * inv % p;
            for (std::int64_t j = col; j < d; ++j)
                m[row][j] = ((m[row][j] - factor * m[col][j]) % p + p) % p;
        }
    }
    return det;
}

Nat count_normalizer_bruteforce(const HMatrix& h, std::uint64_t limit) {
    if (checked_pow(h.p, h.d * h.d, limit) > limit) throw OracleBoundError();
    auto pows = matrix_powers(h);
    Nat count = 0;
    enumerate_invertible(h.p, h.d, [&](const Mat& a) {
        Mat ah = mat_mul(a, h.entries, h.p);
        for (std::int64_t k = 0; k < h.n; ++k)
            if (mat_mul(pows[k], a, h.p) == ah) {
                ++count;
                return;
            }
    });
    return count;
}

Nat count_centralizer_bruteforce(const HMatrix& h, std::uint64_t limit) {
    if (checked_pow(h.p, h.d * h.d, limit) > limit) throw OracleBoundError();
    Nat count = 0;
    enumerate_invertible(h.p, h.d, [&](const Mat& a) {
        if (mat_mul(a, h.entries, h.p) == mat_mul(h.entries, a, h.p)) ++count;
    });
    return count;
}

Nat count_conjugating_matrices(const HMatrix& h, std::int64_t lambda, std::uint64_t limit) {
    std::int64_t p = h.p, d = h.d, dd = d * d;
    auto pows = matrix_powers(h);
    lambda %= h.n;
    if (lambda < 0) lambda += h.n;
    const Mat& hl = pows[lambda];

    // Linear system over F_p: (A h)_{ij} = (h^lambda A)_{ij}, unknowns A_{rc}.
    Mat sys(dd, std::vector<std::int64_t>(dd, 0));
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            auto& eq = sys[i * d + j];
            for (std::int64_t k = 0; k < d; ++k) {
                eq[i * d + k] = (eq[i * d + k] + h.entries[k][j]) % p;
                eq[k * d + j] = ((eq[k * d + j] - hl[i][k]) % p + p) % p;
            }
        }

    // Nullspace basis by Gaussian elimination.
    std::vector<std::int64_t> pivot_of_col(dd, -1);
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < dd && rank < dd; ++col) {
        std::int64_t pr = -1;
        for (std::int64_t row = rank; row < dd; ++row)
            if (sys[row][col] != 0) { pr = row; break; }
        if (pr < 0) continue;
        std::swap(sys[rank], sys[pr]);
        std::int64_t inv = pow_mod(sys[rank][col], p - 2, p);
        for (auto& c : sys[rank]) c = c * inv % p;
        for (std::int64_t row = 0; row < dd; ++row) {
            if (row == rank || sys[row][col] == 0) continue;
            std::int64_t factor = sys[row][col];
            for (std::int64_t j = 0; j < dd; ++j)
                sys[row][j] = ((sys[row][j] - factor * sys[rank][j]) % p + p) % p;
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::int64_t> free_cols;
    for (std::int64_t col = 0; col < dd; ++col)
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    std::int64_t dim = static_cast<std::int64_t>(free_cols.size());
    if (checked_pow(p, dim, limit) > limit) throw OracleBoundError();

    std::vector<std::vector<std::int64_t>> basis;
    for (auto fc : free_cols) {
        std::vector<std::int64_t> v(dd, 0);
        v[fc] = 1;
        for (std::int64_t col = 0; col < dd; ++col) {
            std::int64_t pr = pivot_of_col[col];
            if (pr >= 0) v[col] = (p - sys[pr][fc] % p) % p;
        }
        basis.push_back(std::move(v));
    }

    // Enumerate every solution, count the invertible ones.
    Nat count = 0;
    std::vector<std::int64_t> coeff(dim, 0);
    std::vector<std::int64_t> flat(dd, 0);
    for (;;) {
        std::fill(flat.begin(), flat.end(), 0);
        for (std::int64_t b = 0; b < dim; ++b) {
            if (coeff[b] == 0) continue;
            for (std::int64_t j = 0; j < dd; ++j)
                flat[j] = (flat[j] + coeff[b] * basis[b][j]) % p;
        }
        Mat a(d, std::vector<std::int64_t>(d));
        for (std::int64_t i = 0; i < d; ++i)
            for (std::int64_t j = 0; j < d; ++j) a[i][j] = flat[i * d + j];
        if (is_invertible(a, p)) ++count;

        std::int64_t b = 0;
        while (b < dim && ++coeff[b] == p) coeff[b++] = 0;
        if (b == dim) break;
    }
    return count;
}

Nat count_normalizer_linear(const HMatrix& h, std::uint64_t limit) {
    Nat total = 0;
    for (std::int64_t lambda = 1; lambda < h.n; ++lambda)
        if (std::gcd(lambda, h.n) == 1) total += count_conjugating_matrices(h, lambda, limit);
    if (h.n == 1) total = count_conjugating_matrices(h, 0, limit);
    return total;
}

Nat count_normalizer_joint(const std::vector<HMatrix>& hs, std::uint64_t limit) {
    if (hs.empty()) throw std::invalid_argument("no components");
    std::int64_t n = hs.front().n;
    for (const auto& h : hs)
        if (h.n != n) throw std::invalid_argument("mismatched complement orders");
    Nat total = 0;
    for (std::int64_t lambda = 1; lambda < n; ++lambda) {
        if (std::gcd(lambda, n) != 1) continue;
        Nat prod = 1;
        for (const auto& h : hs) prod *= count_conjugating_matrices(h, lambda, limit);
        total += prod;
    }
    return total;
}

std::int64_t ExplicitGroup::encode(const std::vector<std::int64_t>& v, std::int64_t k) const {
    std::int64_t vidx = 0;
    for (size_t j = v.size(); j-- > 0;) vidx = vidx * moduli[j] + v[j];
    return vidx * n + k;
}

void ExplicitGroup::decode(std::int64_t idx, std::vector<std::int64_t>& v, std::int64_t& k) const {
    k = idx % n;
    std::int64_t vidx = idx / n;
    v.resize(moduli.size());
    for (size_t j = 0; j < moduli.size(); ++j) {
        v[j] = vidx % moduli[j];
        vidx /= moduli[j];
    }
}

std::int64_t ExplicitGroup::mult(std::int64_t a, std::int64_t b) const {
    std::vector<std::int64_t> va, vb;
    std::int64_t ka, kb;
    decode(a, va, ka);
    decode(b, vb, kb);
    // v = va + h^{ka} vb, componentwise over each prime block.
    std::vector<std::int64_t> v(va.size());
    for (size_t c = 0; c < comp_offset.size(); ++c) {
        std::int64_t off = comp_offset[c];
        std::int64_t p = comp_prime[c];
        const auto& m = h_pows[c][ka];
        std::int64_t dim = static_cast<std::int64_t>(m.size());
        for (std::int64_t i = 0; i < dim; ++i) {
            std::int64_t acc = va[off + i];
            for (std::int64_t j = 0; j < dim; ++j) acc += m[i][j] * vb[off + j];
            v[off + i] = acc % p;
        }
    }
    return encode(v, (ka + kb) % n);
}

std::int64_t ExplicitGroup::element_order(std::int64_t a) const {
    std::int64_t x = a, m = 1;
    while (x != identity()) {
        x = mult(x, a);
        ++m;
    }
    return m;
}

ExplicitGroup build_group(const KernelActionSpec& spec, std::int64_t max_order) {
    auto decomp = validate_and_decompose(spec);
    ExplicitGroup g;
    g.n = spec.n;
    g.kernel_size = 1;
    for (const auto& data : decomp) {
        std::vector<std::pair<std::int64_t, std::int64_t>> classes;
        for (const auto& [cls, e] : data.classes) classes.emplace_back(cls.rep, e);
        HMatrix h = build_h_matrix(data.p, data.n, classes);
        g.comp_offset.push_back(static_cast<std::int64_t>(g.moduli.size()));
        g.comp_prime.push_back(data.p);
        std::vector<Mat> pows{mat_identity(h.d)};
        for (std::int64_t k = 1; k < g.n; ++k)
            pows.push_back(mat_mul(pows.back(), h.entries, h.p));
        g.h_pows.push_back(std::move(pows));
        for (std::int64_t i = 0; i < h.d; ++i) g.moduli.push_back(data.p);
        for (std::int64_t i = 0; i < h.d; ++i) {
            if (g.kernel_size > max_order / data.p)
                throw OracleBoundError();
            g.kernel_size *= data.p;
        }
    }
    if (g.kernel_size > max_order / g.n) throw OracleBoundError();
    g.order = g.kernel_size * g.n;

    // Frobenius property, checked directly on every (k, v) pair.
    std::vector<std::int64_t> v(g.moduli.size(), 0);
    for (std::int64_t vidx = 1; vidx < g.kernel_size; ++vidx) {
        std::int64_t t = vidx;
        for (size_t j = 0; j < g.moduli.size(); ++j) {
            v[j] = t % g.moduli[j];
            t /= g.moduli[j];
        }
        for (std::int64_t k = 1; k < g.n; ++k) {
            bool fixed = true;
            for (size_t c = 0; c < g.comp_offset.size() && fixed; ++c) {
                std::int64_t off = g.comp_offset[c];
                std::int64_t p = g.comp_prime[c];
                const auto& m = g.h_pows[c][k];
                std::int64_t dim = static_cast<std::int64_t>(m.size());
                for (std::int64_t i = 0; i < dim && fixed; ++i) {
                    std::int64_t acc = 0;
                    for (std::int64_t j = 0; j < dim; ++j) acc += m[i][j] * v[off + j];
                    if (acc % p != v[off + i]) fixed = false;
                }
            }
            if (fixed)
                throw std::logic_error("Frobenius property fails on explicit group (bug)");
        }
    }
    return g;
}

GeneratingSet find_generating_set(const ExplicitGroup& g) {
    auto closure = [&](const std::vector<std::int64_t>& gens) {
        std::vector<bool> in(g.order, false);
        std::queue<std::int64_t> q;
        in[g.identity()] = true;
        q.push(g.identity());
        while (!q.empty()) {
            std::int64_t x = q.front();
            q.pop();
            for (auto ge : gens) {
                std::int64_t y = g.mult(x, ge);
                if (!in[y]) {
                    in[y] = true;
                    q.push(y);
                }
            }
        }
        return in;
    };

    GeneratingSet gens;
    std::vector<std::int64_t> zero(g.moduli.size(), 0);
    gens.elements.push_back(g.encode(zero, 1 % g.n));
    auto in = closure(gens.elements);
    for (;;) {
        std::int64_t missing = -1;
        // Kernel vectors scanned by smallest encoding first.
        for (std::int64_t vidx = 1; vidx < g.kernel_size; ++vidx) {
            std::int64_t idx = vidx * g.n;  // (v, k=0)
            if (!in[idx]) { missing = idx; break; }
        }
        if (missing < 0) break;
        gens.elements.push_back(missing);
        in = closure(gens.elements);
    }
    // Full closure reached; double-check against the stray case of a missing
    // mixed element (cannot happen once V and h are generated).
    for (std::int64_t i = 0; i < g.order; ++i)
        if (!in[i]) throw std::logic_error("generating set closure incomplete (bug)");
    return gens;
}

Nat count_automorphisms_bruteforce(const ExplicitGroup& g, const GeneratingSet& gens,
                                   double limit) {
    std::int64_t ngen = static_cast<std::int64_t>(gens.elements.size());
    if (std::pow(static_cast<double>(g.order), static_cast<double>(ngen)) > limit)
        throw OracleBoundError();

    // Canonical word table: BFS from the identity, generators tried in index
    // order, gives each element a shortest-lex word via (parent, generator).
    std::vector<std::int64_t> parent(g.order, -1), via(g.order, -1), bfs_order;
    std::queue<std::int64_t> q;
    parent[g.identity()] = g.identity();
    q.push(g.identity());
    bfs_order.push_back(g.identity());
    while (!q.empty()) {
        std::int64_t x = q.front();
        q.pop();
        for (std::int64_t gi = 0; gi < ngen; ++gi) {
            std::int64_t y = g.mult(x, gens.elements[gi]);
            if (parent[y] < 0) {
                parent[y] = x;
                via[y] = gi;
                q.push(y);
                bfs_order.push_back(y);
            }
        }
    }

    std::vector<std::int64_t> gen_order(ngen);
    for (std::int64_t gi = 0; gi < ngen; ++gi) gen_order[gi] = g.element_order(gens.elements[gi]);

    // Candidate images: elements grouped by order (an automorphism preserves
    // element order, so anything else cannot extend).
    std::vector<std::vector<std::int64_t>> candidates(ngen);
    for (std::int64_t x = 0; x < g.order; ++x) {
        std::int64_t ord = g.element_order(x);
        for (std::int64_t gi = 0; gi < ngen; ++gi)
            if (ord == gen_order[gi]) candidates[gi].push_back(x);
    }

    std::vector<std::int64_t> images(ngen), phi(g.order);
    std::vector<bool> hit(g.order);
    Nat count = 0;

    auto test = [&]() {
        // phi defined by evaluating canonical words in the candidate images.
        phi[g.identity()] = g.identity();
        for (auto x : bfs_order)
            if (x != g.identity()) phi[x] = g.mult(phi[parent[x]], images[via[x]]);
        // Homomorphism check on (x, generator) pairs extends to all products.
        for (std::int64_t x = 0; x < g.order; ++x)
            for (std::int64_t gi = 0; gi < ngen; ++gi)
                if (phi[g.mult(x, gens.elements[gi])] != g.mult(phi[x], images[gi])) return false;
        std::fill(hit.begin(), hit.end(), false);
        for (std::int64_t x = 0; x < g.order; ++x) {
            if (hit[phi[x]]) return false;
            hit[phi[x]] = true;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::int64_t gi) -> void {
        if (gi == ngen) {
            if (test()) ++count;
            return;
        }
        for (auto img : candidates[gi]) {
            images[gi] = img;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
    return count;
}

bool frobenius_check_matrix(const HMatrix& h) {
    auto pows = matrix_powers(h);
    auto id = mat_identity(h.d);
    for (std::int64_t k = 1; k < h.n; ++k) {
        Mat diff = pows[k];
        for (std::int64_t i = 0; i < h.d; ++i)
            for (std::int64_t j = 0; j < h.d; ++j)
                diff[i][j] = ((diff[i][j] - id[i][j]) % h.p + h.p) % h.p;
        if (det_mod(diff, h.p) == 0) return false;
    }
    return true;
}

}  // namespace frobaut
