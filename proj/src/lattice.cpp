#include "abel/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "abel/error.hpp"

namespace abel {

namespace {

using Mat = std::vector<std::vector<long>>;

// Row-style Hermite normal form of the lattice spanned by the given rows.
// The input must span a full-rank sublattice of Z^n. Result: n x n upper
// triangular, positive pivots, entries above a pivot reduced into [0, pivot).
Mat hnf_rows(Mat rows, int n) {
    int r = 0;
    for (int col = 0; col < n; ++col) {
        // Euclidean elimination below the pivot.
        while (true) {
            int best = -1;
            for (int i = r; i < (int)rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best < 0 || std::abs(rows[i][col]) < std::abs(rows[best][col])))
                    best = i;
            if (best < 0) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (int i = r + 1; i < (int)rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                long q = rows[i][col] / rows[r][col];
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r >= (int)rows.size() || rows[r][col] == 0)
            throw precondition_error("hnf_rows: lattice is not full rank");
        if (rows[r][col] < 0)
            for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        for (int i = 0; i < r; ++i) {
            long q = rows[i][col] / rows[r][col];
            if (rows[i][col] - q * rows[r][col] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(n);
    return rows;
}

long det_upper(const Mat& m) {
    long d = 1;
    for (size_t i = 0; i < m.size(); ++i) d *= m[i][i];
    return d;
}

// Diagonal of the Smith normal form (absolute values, divisibility chain).
std::vector<long> snf_diagonal(Mat m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int t = 0;
    auto swap_rows = [&](int a, int b) { std::swap(m[a], m[b]); };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };
    while (t < std::min(rows, cols)) {
        // Find a nonzero entry in the remaining block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool again = false;
        for (int i = t + 1; i < rows; ++i) {
            long q = m[i][t] / m[t][t];
            if (q != 0)
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) again = true;
        }
        for (int j = t + 1; j < cols; ++j) {
            long q = m[t][j] / m[t][t];
            if (q != 0)
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) again = true;
        }
        if (again) continue;
        ++t;
    }
    std::vector<long> diag;
    for (int i = 0; i < std::min(rows, cols); ++i)
        diag.push_back(std::abs(m[i][i]));
    // Enforce the divisibility chain.
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[i] == 0 || diag[j] % diag[i] == 0) continue;
            long g = std::gcd(diag[i], diag[j]);
            long l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

Mat diagonal_matrix(const std::vector<long>& d) {
    int n = (int)d.size();
    Mat m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = d[i];
    return m;
}

// Solves y^T * R = target for upper triangular R; entries must come out
// integral (the target lies in the lattice). Column i is touched only by
// rows <= i, so the solve runs front to back.
std::vector<long> solve_in_lattice(const Mat& R, const std::vector<long>& target) {
    int n = (int)R.size();
    std::vector<long> y(n, 0), rest = target;
    for (int i = 0; i < n; ++i) {
        if (rest[i] % R[i][i] != 0)
            throw precondition_error("solve_in_lattice: vector not in lattice");
        y[i] = rest[i] / R[i][i];
        for (int j = 0; j < n; ++j) rest[j] -= y[i] * R[i][j];
    }
    for (long r : rest)
        if (r != 0)
            throw precondition_error("solve_in_lattice: vector not in lattice");
    return y;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<long>& factors) {
    for (long a : factors)
        if (a <= 0)
            throw precondition_error("FiniteAbelianGroup: factors must be positive");
    std::vector<long> f = factors;
    // Pairwise (gcd, lcm) reduction yields the invariant factors of the
    // diagonal relation matrix.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) {
                long g = std::gcd(f[i], f[j]);
                if (f[j] % f[i] == 0 || g == f[i]) continue;
                long l = f[i] / g * f[j];
                f[i] = g;
                f[j] = l;
                changed = true;
            }
    }
    std::sort(f.begin(), f.end());
    for (long a : f)
        if (a > 1) factors_.push_back(a);
}

long FiniteAbelianGroup::order() const {
    long n = 1;
    for (long d : factors_) n *= d;
    return n;
}

std::vector<std::vector<long>> FiniteAbelianGroup::elements() const {
    std::vector<std::vector<long>> out;
    long n = order();
    out.reserve(n);
    for (long idx = 0; idx < n; ++idx) {
        std::vector<long> v(factors_.size());
        long rem = idx;
        for (size_t i = 0; i < factors_.size(); ++i) {
            v[i] = rem % factors_[i];
            rem /= factors_[i];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<long>> Subgroup::generators() const {
    std::vector<std::vector<long>> gens;
    for (const auto& row : basis) {
        std::vector<long> g(row.size());
        bool nonzero = false;
        for (size_t i = 0; i < row.size(); ++i) {
            g[i] = ((row[i] % parent_factors[i]) + parent_factors[i]) %
                   parent_factors[i];
            nonzero |= g[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(g));
    }
    return gens;
}

FiniteAbelianGroup Subgroup::abstract_type() const {
    int n = (int)parent_factors.size();
    if (n == 0) return FiniteAbelianGroup({});
    // Relation lattice of L/(D Z^n) expressed in the HNF basis of L.
    Mat rel(n);
    for (int i = 0; i < n; ++i) {
        std::vector<long> target(n, 0);
        target[i] = parent_factors[i];
        rel[i] = solve_in_lattice(basis, target);
    }
    std::vector<long> diag = snf_diagonal(rel);
    return FiniteAbelianGroup(diag);
}

std::string Subgroup::canonical_key() const {
    std::ostringstream os;
    for (const auto& row : basis)
        for (long x : row) os << x << ",";
    return os.str();
}

namespace {

Subgroup make_subgroup(const std::vector<long>& parent, Mat hnf) {
    Subgroup s;
    s.parent_factors = parent;
    long parent_order = 1;
    for (long d : parent) parent_order *= d;
    s.order = parent_order / det_upper(hnf);
    s.basis = std::move(hnf);
    return s;
}

// Mixed-radix element listing for a fixed coordinate layout (no
// invariant-factor renormalization: the caller's layout is load-bearing
// for pairings).
std::vector<std::vector<long>> raw_elements(const std::vector<long>& factors) {
    long order = 1;
    for (long d : factors) order *= d;
    std::vector<std::vector<long>> out;
    out.reserve(order);
    for (long idx = 0; idx < order; ++idx) {
        std::vector<long> v(factors.size());
        long rem = idx;
        for (size_t i = 0; i < factors.size(); ++i) {
            v[i] = rem % factors[i];
            rem /= factors[i];
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Breadth-first closure over subgroups: extend each known subgroup by each
// group element, deduplicating by canonical HNF. The accept predicate can
// prune extensions (used for the isotropic enumeration).
template <typename Accept>
std::vector<Subgroup> subgroup_closure(const std::vector<long>& factors,
                                       Accept&& accept) {
    int n = (int)factors.size();
    std::vector<Subgroup> out;
    if (n == 0) {
        Subgroup s;
        s.order = 1;
        out.push_back(s);
        return out;
    }
    std::vector<std::vector<long>> elems = raw_elements(factors);

    std::set<std::string> seen;
    std::vector<Subgroup> queue;
    Subgroup trivial = make_subgroup(factors, diagonal_matrix(factors));
    seen.insert(trivial.canonical_key());
    queue.push_back(trivial);
    for (size_t head = 0; head < queue.size(); ++head) {
        Subgroup current = queue[head];  // copy: queue may reallocate
        out.push_back(current);
        for (const auto& g : elems) {
            if (!accept(current, g)) continue;
            Mat rows = current.basis;
            rows.push_back(g);
            Subgroup next = make_subgroup(factors, hnf_rows(std::move(rows), n));
            if (next.order == current.order) continue;
            if (seen.insert(next.canonical_key()).second) queue.push_back(next);
        }
    }
    return out;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& G,
                                          long bound) {
    if (G.order() > bound)
        throw bound_error("enumerate_subgroups: group order " +
                          std::to_string(G.order()) + " exceeds bound " +
                          std::to_string(bound));
    return subgroup_closure(G.factors(),
                            [](const Subgroup&, const std::vector<long>&) {
                                return true;
                            });
}

long hom_sym_count(const FiniteAbelianGroup& K, long bound) {
    const std::vector<long>& e = K.factors();
    int r = (int)e.size();
    if (r == 0) return 1;
    if (K.order() > bound)
        throw bound_error("hom_sym_count: group order exceeds bound");

    // f(g_i) = sum_j M[j][i] ghat_j with e_i f(g_i) = 0, i.e. M[j][i] is a
    // multiple of e_j / gcd(e_j, e_i); symmetry in the canonical pairing
    // <ghat_j, g_i> = delta / e_j reads M[j][i] e_i = M[i][j] e_j mod e_i e_j.
    std::vector<std::vector<long>> step(r, std::vector<long>(r));
    std::vector<std::vector<long>> count(r, std::vector<long>(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            long g = std::gcd(e[j], e[i]);
            step[j][i] = e[j] / g;
            count[j][i] = g;
        }

    long total = 0;
    std::vector<std::vector<long>> M(r, std::vector<long>(r, 0));
    // Iterate over all valid matrices via mixed-radix counters.
    std::vector<long> idx(r * r, 0);
    while (true) {
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) M[j][i] = idx[j * r + i] * step[j][i];
        bool sym = true;
        for (int i = 0; i < r && sym; ++i)
            for (int j = i + 1; j < r && sym; ++j)
                if (((M[j][i] * e[i]) % (e[i] * e[j])) !=
                    ((M[i][j] * e[j]) % (e[i] * e[j])))
                    sym = false;
        if (sym) ++total;
        int pos = 0;
        while (pos < r * r) {
            if (++idx[pos] < count[pos / r][pos % r]) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == r * r) break;
    }
    return total;
}

long nu_subgroup_formula(const std::vector<long>& type, long bound) {
    FiniteAbelianGroup G(type);
    std::vector<Subgroup> subs = enumerate_subgroups(G, bound);
    std::map<FiniteAbelianGroup, long> memo;
    long total = 0;
    for (const auto& s : subs) {
        FiniteAbelianGroup K = s.abstract_type();
        auto it = memo.find(K);
        if (it == memo.end()) it = memo.emplace(K, hom_sym_count(K)).first;
        total += it->second;
    }
    return total;
}

PairingGroup::PairingGroup(const std::vector<long>& type) {
    FiniteAbelianGroup normalized(type);
    const std::vector<long>& d = normalized.factors();
    base_ = d;
    base_.insert(base_.end(), d.begin(), d.end());
    for (long di : d) lcm_ = std::lcm(lcm_, di);
}

long PairingGroup::base_order() const {
    long n = 1;
    for (long d : base_) n *= d;
    return n;
}

long PairingGroup::pairing(const std::vector<long>& x,
                           const std::vector<long>& y) const {
    int n = half_rank();
    if ((int)x.size() != 2 * n || (int)y.size() != 2 * n)
        throw precondition_error("PairingGroup: element rank mismatch");
    long acc = 0;
    for (int i = 0; i < n; ++i) {
        long d = base_[i];
        long t = (x[i] * y[n + i] - x[n + i] * y[i]) % d;
        acc = (acc + t * (lcm_ / d)) % lcm_;
    }
    return ((acc % lcm_) + lcm_) % lcm_;
}

long nu_isotropic(const std::vector<long>& type, long bound) {
    FiniteAbelianGroup base(type);
    long N = base.order();
    if (N * N > bound)
        throw bound_error("nu_isotropic: squared order " +
                          std::to_string(N * N) + " exceeds bound " +
                          std::to_string(bound));
    if (base.rank() == 0) return 1;
    PairingGroup pairing_group(type);

    auto accept = [&](const Subgroup& s, const std::vector<long>& g) {
        if (s.order >= N) return false;
        for (const auto& row : s.basis)
            if (pairing_group.pairing(g, row) != 0) return false;
        return true;
    };

    long count = 0;
    for (const auto& s : subgroup_closure(pairing_group.base_factors(), accept))
        if (s.order == N) ++count;
    return count;
}

long divisor_sigma(long d) {
    long s = 0;
    for (long k = 1; k <= d; ++k)
        if (d % k == 0) s += k;
    return s;
}

long nu_recursion(long p, int m, int n) {
    if (m > n) throw precondition_error("nu_recursion: requires m <= n");
    if (m < 0) throw precondition_error("nu_recursion: requires m >= 0");
    long pn = 1;
    for (int i = 0; i < m + n; ++i) pn *= p;
    if (m == 0) return divisor_sigma(pn);
    return divisor_sigma(pn) + p * p * p * nu_recursion(p, m - 1, n - 1);
}

long nu_closed(long d1, long d2) {
    if (d1 <= 0 || d2 <= 0)
        throw precondition_error("nu_closed: class type must be positive");
    long total = 0;
    long g = std::gcd(d1, d2);
    for (long k = 1; k <= g; ++k) {
        if (g % k != 0) continue;
        long rest = d1 * d2 / (k * k);
        total += k * k * k * divisor_sigma(rest);
    }
    return total;
}

}  // namespace abel
