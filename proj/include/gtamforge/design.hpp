#pragma once

#include <cmath>
#include <functional>
#include <numeric>

#include "gtamforge/compat.hpp"
#include "gtamforge/core.hpp"

namespace gtam {

// Binary vector as a vector<uint8_t> of 0/1 entries.
using BitVec = std::vector<uint8_t>;

inline bool dot_is_zero(const BitVec& a, const BitVec& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] & b[k]) return false;
    return true;
}

// Paired vector lists realizing a compatibility matrix: M(i,j)=0 iff
// E_i . W_j = 0. All vectors share one length l (possibly 0).
struct CompatibilitySolution {
    std::vector<BitVec> E, W;
    int length = 0;
};

inline bool verify_solution(const BitMatrix& M, const CompatibilitySolution& sol) {
    if (static_cast<int>(sol.E.size()) != M.m || static_cast<int>(sol.W.size()) != M.n)
        throw InputError("verify_solution: dimension mismatch");
    for (auto& v : sol.E)
        if (static_cast<int>(v.size()) != sol.length) throw InputError("verify_solution: E length mismatch");
    for (auto& v : sol.W)
        if (static_cast<int>(v.size()) != sol.length) throw InputError("verify_solution: W length mismatch");
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.n; ++j)
            if ((M.at(i, j) == 0) != dot_is_zero(sol.E[i], sol.W[j])) return false;
    return true;
}

// Length-min(m,n) construction: unit vectors on the smaller dimension, matrix
// rows (or columns) on the other.
inline CompatibilitySolution solve_trivial(const BitMatrix& M) {
    CompatibilitySolution sol;
    if (M.n <= M.m) {
        sol.length = M.n;
        for (int j = 0; j < M.n; ++j) {
            BitVec w(M.n, 0);
            w[j] = 1;
            sol.W.push_back(std::move(w));
        }
        for (int i = 0; i < M.m; ++i) {
            BitVec e(M.n, 0);
            for (int j = 0; j < M.n; ++j) e[j] = M.at(i, j);
            sol.E.push_back(std::move(e));
        }
    } else {
        sol.length = M.m;
        for (int i = 0; i < M.m; ++i) {
            BitVec e(M.m, 0);
            e[i] = 1;
            sol.E.push_back(std::move(e));
        }
        for (int j = 0; j < M.n; ++j) {
            BitVec w(M.m, 0);
            for (int i = 0; i < M.m; ++i) w[i] = M.at(i, j);
            sol.W.push_back(std::move(w));
        }
    }
    if (!verify_solution(M, sol)) throw VerifyError("solve_trivial: self-verification failed");
    return sol;
}

inline BitMatrix diagonal_one_matrix(int n) {
    BitMatrix M(n, n);
    for (int i = 0; i < n; ++i) M.at(i, i) = 1;
    return M;
}

inline BitMatrix diagonal_zero_matrix(int n) {
    BitMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = (i == j) ? 0 : 1;
    return M;
}

// Diagonal-one: length exactly n, unit vectors on both sides.
inline CompatibilitySolution solve_diagonal_one(int n) {
    if (n < 1) throw InputError("solve_diagonal_one: n >= 1 required");
    CompatibilitySolution sol;
    sol.length = n;
    for (int i = 0; i < n; ++i) {
        BitVec v(n, 0);
        v[i] = 1;
        sol.E.push_back(v);
        sol.W.push_back(v);
    }
    if (!verify_solution(diagonal_one_matrix(n), sol))
        throw VerifyError("solve_diagonal_one: self-verification failed");
    return sol;
}

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline int smallest_l_choose_half_at_least(uint64_t n) {
    int l = 0;
    while (binomial(l, l / 2) < n) ++l;
    return l;
}

// First n binary strings of length l with exactly k ones, in lexicographic
// order (treating index 0 as the leftmost character).
inline std::vector<BitVec> constant_weight_strings(int l, int k, int n) {
    std::vector<BitVec> out;
    BitVec v(l, 0);
    std::function<bool(int, int)> rec = [&](int pos, int left) -> bool {
        if (static_cast<int>(out.size()) == n) return true;
        if (pos == l) {
            if (left == 0) out.push_back(v);
            return static_cast<int>(out.size()) == n;
        }
        if (left > l - pos) return false;
        v[pos] = 0;
        if (rec(pos + 1, left)) return true;
        if (left > 0) {
            v[pos] = 1;
            if (rec(pos + 1, left - 1)) return true;
            v[pos] = 0;
        }
        return false;
    };
    rec(0, k);
    if (static_cast<int>(out.size()) != n) throw InputError("constant_weight_strings: not enough strings");
    return out;
}

// Diagonal-zero: constant-weight construction. l is the least value with
// C(l, floor(l/2)) >= n; E vectors are the first n weight-floor(l/2) strings,
// W vectors their complements.
inline CompatibilitySolution solve_diagonal_zero(int n) {
    if (n < 2) throw InputError("solve_diagonal_zero: n >= 2 required");
    int l = smallest_l_choose_half_at_least(n);
    CompatibilitySolution sol;
    sol.length = l;
    sol.E = constant_weight_strings(l, l / 2, n);
    for (auto& e : sol.E) {
        BitVec w(l);
        for (int k = 0; k < l; ++k) w[k] = 1 - e[k];
        sol.W.push_back(std::move(w));
    }
    if (l < floor_log2(n) + 1) throw VerifyError("solve_diagonal_zero: length below lower bound");
    if (!verify_solution(diagonal_zero_matrix(n), sol))
        throw VerifyError("solve_diagonal_zero: self-verification failed");
    return sol;
}

// Submatrix partition: pairwise row- and column-disjoint blocks.
struct SubmatrixPartition {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks; // (rows, cols)

    void validate(int m, int n) const {
        std::vector<char> r(m, 0), c(n, 0);
        for (auto& [R, C] : blocks) {
            for (int i : R) {
                if (i < 0 || i >= m || r[i]) throw InputError("partition: bad/duplicate row index");
                r[i] = 1;
            }
            for (int j : C) {
                if (j < 0 || j >= n || c[j]) throw InputError("partition: bad/duplicate col index");
                c[j] = 1;
            }
        }
    }
};

// Composition for matrices whose 1s all lie inside independent blocks:
// concatenate block solutions, zero-fill rows/columns outside every block.
inline CompatibilitySolution compose_ones_submatrices(const BitMatrix& M, const SubmatrixPartition& part,
                                                      const std::vector<CompatibilitySolution>& subs) {
    part.validate(M.m, M.n);
    if (subs.size() != part.blocks.size()) throw InputError("compose: block/solution count mismatch");
    std::vector<int> row_block(M.m, -1), col_block(M.n, -1);
    std::vector<int> row_pos(M.m, -1), col_pos(M.n, -1);
    for (size_t b = 0; b < part.blocks.size(); ++b) {
        auto& [R, C] = part.blocks[b];
        if (static_cast<int>(subs[b].E.size()) != static_cast<int>(R.size()) ||
            static_cast<int>(subs[b].W.size()) != static_cast<int>(C.size()))
            throw InputError("compose: subsolution dims mismatch");
        for (size_t k = 0; k < R.size(); ++k) { row_block[R[k]] = static_cast<int>(b); row_pos[R[k]] = static_cast<int>(k); }
        for (size_t k = 0; k < C.size(); ++k) { col_block[C[k]] = static_cast<int>(b); col_pos[C[k]] = static_cast<int>(k); }
    }
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.n; ++j)
            if (M.at(i, j) && (row_block[i] < 0 || row_block[i] != col_block[j]))
                throw InputError("compose: a 1 entry lies outside all blocks");

    std::vector<int> offset(subs.size() + 1, 0);
    for (size_t b = 0; b < subs.size(); ++b) offset[b + 1] = offset[b] + subs[b].length;
    CompatibilitySolution sol;
    sol.length = offset.back();
    for (int i = 0; i < M.m; ++i) {
        BitVec e(sol.length, 0);
        if (row_block[i] >= 0) {
            int b = row_block[i];
            const BitVec& src = subs[b].E[row_pos[i]];
            std::copy(src.begin(), src.end(), e.begin() + offset[b]);
        }
        sol.E.push_back(std::move(e));
    }
    for (int j = 0; j < M.n; ++j) {
        BitVec w(sol.length, 0);
        if (col_block[j] >= 0) {
            int b = col_block[j];
            const BitVec& src = subs[b].W[col_pos[j]];
            std::copy(src.begin(), src.end(), w.begin() + offset[b]);
        }
        sol.W.push_back(std::move(w));
    }
    if (!verify_solution(M, sol)) throw VerifyError("compose_ones_submatrices: verification failed");
    return sol;
}

// Uniform random permutation of 1..n: repeatedly select a random remaining
// element.
inline std::vector<int> random_permutation(int n, Rng& rng) {
    if (n < 1) throw InputError("random_permutation: n >= 1 required");
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    std::vector<int> out;
    out.reserve(n);
    while (!s.empty()) {
        size_t k = rng.below(s.size());
        out.push_back(s[k]);
        s.erase(s.begin() + k);
    }
    return out;
}

namespace detail {

inline BitVec pad1(const BitVec& s, int k1, int k2, int k3) {
    if (static_cast<int>(s.size()) > k3) throw InputError("pad1: string longer than k3");
    BitVec v;
    v.reserve(k1 + k2 + k3);
    v.insert(v.end(), k1, 0);
    v.insert(v.end(), k2, 1);
    v.insert(v.end(), s.begin(), s.end());
    v.insert(v.end(), k3 - s.size(), 0); // zero-extended tail; see randomized solver note
    return v;
}

inline BitVec pad2(const BitVec& s, int k1, int k2, int k3) {
    if (static_cast<int>(s.size()) > k3) throw InputError("pad2: string longer than k3");
    BitVec v;
    v.reserve(k1 + k2 + k3);
    v.insert(v.end(), k1, 1);
    v.insert(v.end(), k2, 0);
    v.insert(v.end(), s.begin(), s.end());
    v.insert(v.end(), k3 - s.size(), 0);
    return v;
}

inline BitVec apply_perm(const BitVec& s, const std::vector<int>& p) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); ++i) v[i] = s[p[i] - 1];
    return v;
}

} // namespace detail

struct RandomizedDesignResult {
    CompatibilitySolution sol;
    int attempts = 0;
    int k1 = 0;   // = k2
    int c = 0;    // instance constant for one padding segment
    int c_total = 0; // constant multiplying log(m+n)/eps in the overall length
};

// Randomized construction for matrices whose 0s all lie inside independent
// blocks. Each block solution is padded (pad1 for E, pad2 for W; tails
// zero-extended to the common length U so intra-block inner products are
// preserved) and scrambled by a per-block random permutation; rows/columns
// outside all blocks become all-ones. Retries until verification passes.
inline RandomizedDesignResult randomized_zeros_submatrices(const BitMatrix& M, const SubmatrixPartition& part,
                                                           double eps,
                                                           const std::vector<CompatibilitySolution>& subs,
                                                           Rng rng, int max_retries = 64) {
    part.validate(M.m, M.n);
    if (subs.size() != part.blocks.size()) throw InputError("randomized: block/solution count mismatch");
    if (eps <= 0 || eps >= 2) throw InputError("randomized: eps in (0,2) required");
    std::vector<int> row_block(M.m, -1), col_block(M.n, -1), row_pos(M.m, -1), col_pos(M.n, -1);
    for (size_t b = 0; b < part.blocks.size(); ++b) {
        auto& [R, C] = part.blocks[b];
        for (size_t k = 0; k < R.size(); ++k) { row_block[R[k]] = static_cast<int>(b); row_pos[R[k]] = static_cast<int>(k); }
        for (size_t k = 0; k < C.size(); ++k) { col_block[C[k]] = static_cast<int>(b); col_pos[C[k]] = static_cast<int>(k); }
    }
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.n; ++j)
            if (!M.at(i, j) && (row_block[i] < 0 || row_block[i] != col_block[j]))
                throw InputError("randomized: a 0 entry lies outside all blocks");

    int U = 0;
    for (auto& s : subs) U = std::max(U, s.length);
    double mn = static_cast<double>(M.m) * M.n;
    double lg = std::log2(static_cast<double>(M.m + M.n));
    // Smallest integer c with (1 - eps/4)^((c/eps) log(m+n)) <= 1/(4mn).
    int c = 1;
    while (std::pow(1.0 - eps / 4.0, (c / eps) * lg) > 1.0 / (4.0 * mn)) ++c;
    int k1 = static_cast<int>(std::ceil((eps / 2.0) * U + (c / eps) * lg));
    int z = 2 * k1 + U;

    RandomizedDesignResult out;
    out.k1 = k1;
    out.c = c;
    out.c_total = 2 * c;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        CompatibilitySolution sol;
        sol.length = z;
        sol.E.assign(M.m, BitVec(z, 1));
        sol.W.assign(M.n, BitVec(z, 1));
        std::vector<std::vector<int>> perms;
        for (size_t b = 0; b < subs.size(); ++b) perms.push_back(random_permutation(z, rng));
        for (int i = 0; i < M.m; ++i)
            if (row_block[i] >= 0) {
                int b = row_block[i];
                BitVec src = subs[b].E[row_pos[i]];
                src.resize(U, 0);
                sol.E[i] = detail::apply_perm(detail::pad1(src, k1, k1, U), perms[b]);
            }
        for (int j = 0; j < M.n; ++j)
            if (col_block[j] >= 0) {
                int b = col_block[j];
                BitVec src = subs[b].W[col_pos[j]];
                src.resize(U, 0);
                sol.W[j] = detail::apply_perm(detail::pad2(src, k1, k1, U), perms[b]);
            }
        if (verify_solution(M, sol)) {
            out.sol = std::move(sol);
            out.attempts = attempt;
            return out;
        }
    }
    throw VerifyError("randomized_zeros_submatrices: retry budget exhausted");
}

// Optional greedy post-optimization: drop vector positions that are not
// needed to keep verification true. Off by default in all callers.
inline CompatibilitySolution prune_solution_columns(const BitMatrix& M, CompatibilitySolution sol) {
    for (int k = sol.length - 1; k >= 0; --k) {
        CompatibilitySolution trial;
        trial.length = sol.length - 1;
        auto drop = [&](const std::vector<BitVec>& vs) {
            std::vector<BitVec> out;
            for (auto& v : vs) {
                BitVec w;
                w.reserve(v.size() - 1);
                for (int i = 0; i < static_cast<int>(v.size()); ++i)
                    if (i != k) w.push_back(v[i]);
                out.push_back(std::move(w));
            }
            return out;
        };
        trial.E = drop(sol.E);
        trial.W = drop(sol.W);
        if (verify_solution(M, trial)) sol = std::move(trial);
    }
    return sol;
}

// Exhaustive optimum: iterate candidate lengths upward; for each, enumerate
// all assignments of the smaller side and derive the other side greedily with
// the fewest zeros. Lexicographically smallest assignment wins ties.
inline CompatibilitySolution brute_force_optimal(const BitMatrix& M, uint64_t guard = 1ULL << 26) {
    bool transposed = M.m > M.n;
    BitMatrix A = M;
    if (transposed) { // enumerate over rows of the smaller dimension
        A = BitMatrix(M.n, M.m);
        for (int i = 0; i < M.m; ++i)
            for (int j = 0; j < M.n; ++j) A.at(j, i) = M.at(i, j);
    }
    int m = A.m, n = A.n;

    for (int l = 0;; ++l) {
        if (l > std::min(m, n)) throw VerifyError("brute_force_optimal: exceeded trivial bound");
        double work = std::pow(2.0, static_cast<double>(l) * m);
        if (work > static_cast<double>(guard)) throw BoundError("brute_force_optimal: guard exceeded");
        uint64_t total = 1ULL << (static_cast<uint64_t>(l) * m);
        for (uint64_t code = 0; code < total; ++code) {
            std::vector<BitVec> E(m, BitVec(l));
            uint64_t c = code;
            // Highest-order bits encode E[0] so that increasing code order is
            // lexicographic in (E[0], E[1], ...).
            for (int i = m - 1; i >= 0; --i)
                for (int k = l - 1; k >= 0; --k) {
                    E[i][k] = c & 1;
                    c >>= 1;
                }
            std::vector<BitVec> W(n);
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                BitVec w(l, 1);
                for (int i = 0; i < m; ++i)
                    if (!A.at(i, j))
                        for (int k = 0; k < l; ++k)
                            if (E[i][k]) w[k] = 0;
                for (int i = 0; i < m && ok; ++i)
                    if (A.at(i, j) && dot_is_zero(E[i], w)) ok = false;
                W[j] = std::move(w);
            }
            if (!ok) continue;
            CompatibilitySolution sol;
            sol.length = l;
            if (!transposed) { sol.E = std::move(E); sol.W = std::move(W); }
            else { sol.E = std::move(W); sol.W = std::move(E); }
            if (!verify_solution(M, sol)) continue;
            return sol;
        }
    }
}

// Two-function problem: f(i) = 1^i 0^(l-i), g(l-i) = 0^i 1^(l-i); then
// f(x) AND g(y) = 0 iff x + y <= l. Verified exhaustively on construction.
struct TwoFunctionPair {
    int l = 0;
    std::vector<BitVec> f, g; // index 0..l
};

inline TwoFunctionPair two_function(int l) {
    if (l < 0) throw InputError("two_function: l >= 0 required");
    TwoFunctionPair tf;
    tf.l = l;
    for (int i = 0; i <= l; ++i) {
        BitVec fi(l, 0), gi(l, 0);
        for (int k = 0; k < i; ++k) fi[k] = 1;
        for (int k = l - i; k < l; ++k) gi[k] = 1; // g(i) has i trailing ones
        tf.f.push_back(std::move(fi));
        tf.g.push_back(std::move(gi));
    }
    for (int x = 0; x <= l; ++x)
        for (int y = 0; y <= l; ++y)
            if (dot_is_zero(tf.f[x], tf.g[y]) != (x + y <= l))
                throw VerifyError("two_function: property check failed");
    return tf;
}

// Bridge to tile faces: each E vector becomes an east-face bump column, each
// W vector a west-face bump column, on w=1 faces of height l_dim. Face
// compatibility then reproduces the matrix exactly.
inline std::pair<std::vector<FaceGeometry>, std::vector<FaceGeometry>>
vectors_to_bump_geometry(const CompatibilitySolution& sol, int l_dim) {
    if (sol.length > l_dim) throw InputError("vectors_to_bump_geometry: solution longer than face");
    std::vector<FaceGeometry> east, west;
    for (auto& e : sol.E) {
        FaceGeometry g(1, l_dim);
        for (int k = 0; k < sol.length; ++k)
            if (e[k]) g.fill(0, k);
        east.push_back(std::move(g));
    }
    for (auto& w : sol.W) {
        FaceGeometry g(1, l_dim);
        for (int k = 0; k < sol.length; ++k)
            if (w[k]) g.fill(0, k);
        west.push_back(std::move(g));
    }
    return {std::move(east), std::move(west)};
}

} // namespace gtam
