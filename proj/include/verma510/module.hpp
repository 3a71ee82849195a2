#pragma once

#include <map>
#include <string>
#include <vector>

#include "root_data.hpp"
#include "sparse.hpp"

namespace verma510 {

// A concretely realized sl5-module: an ordered basis with a weight per basis
// element and exact matrices for every E_{ij}, i != j in 1..5. The Cartan
// action is diagonal with h_i acting on a weight-nu vector by nu_i.
struct ModuleRep {
    int dim = 0;
    std::vector<Weight> wt;
    // eij[i-1][j-1] is the matrix of E_{ij}; the diagonal slots are unused.
    SparseMat eij[5][5];

    const SparseMat& E(int i, int j) const {
        if (i < 1 || i > 5 || j < 1 || j > 5 || i == j)
            throw std::out_of_range("ModuleRep::E: need i != j in 1..5");
        return eij[i - 1][j - 1];
    }
    SparseMat& E(int i, int j) {
        if (i < 1 || i > 5 || j < 1 || j > 5 || i == j)
            throw std::out_of_range("ModuleRep::E: need i != j in 1..5");
        return eij[i - 1][j - 1];
    }

    // Diagonal matrix of h_i (i in 1..4).
    SparseMat cartan(int i) const {
        if (i < 1 || i > 4) throw std::out_of_range("ModuleRep::cartan: index must be 1..4");
        SparseMat m(dim, dim);
        for (int b = 0; b < dim; ++b)
            if (wt[b][i - 1] != 0) m.add_entry(b, b, Rat(wt[b][i - 1]));
        return m;
    }

    std::map<Weight, std::vector<int>> blocks_by_weight() const {
        std::map<Weight, std::vector<int>> blocks;
        for (int b = 0; b < dim; ++b) blocks[wt[b]].push_back(b);
        return blocks;
    }

    std::map<Weight, int> character() const {
        std::map<Weight, int> ch;
        for (auto& w : wt) ch[w]++;
        return ch;
    }
};

// Restriction of M to given source columns and target rows, reindexed densely.
inline SparseMat restrict_block(const SparseMat& M, const std::vector<int>& target_rows,
                                const std::vector<int>& source_cols) {
    std::map<int, int> col_index;
    for (size_t i = 0; i < source_cols.size(); ++i) col_index[source_cols[i]] = static_cast<int>(i);
    SparseMat out(static_cast<int>(target_rows.size()), static_cast<int>(source_cols.size()));
    for (size_t r = 0; r < target_rows.size(); ++r) {
        std::vector<SparseVec::Entry> ts;
        for (auto& [c, v] : M.row(target_rows[r]).entries()) {
            auto it = col_index.find(c);
            if (it != col_index.end()) ts.emplace_back(it->second, v);
        }
        out.set_row(static_cast<int>(r), SparseVec::from_terms(std::move(ts)));
    }
    return out;
}

// Tensor product with the Leibniz action; index (a, b) -> a * B.dim + b.
inline ModuleRep tensor(const ModuleRep& A, const ModuleRep& B) {
    ModuleRep T;
    T.dim = A.dim * B.dim;
    T.wt.reserve(T.dim);
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) T.wt.push_back(A.wt[a] + B.wt[b]);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            SparseMat m(T.dim, T.dim);
            const SparseMat& EA = A.E(i, j);
            const SparseMat& EB = B.E(i, j);
            for (int a = 0; a < A.dim; ++a)
                for (int b = 0; b < B.dim; ++b) {
                    std::vector<SparseVec::Entry> ts;
                    for (auto& [c, v] : EB.row(b).entries()) ts.emplace_back(a * B.dim + c, v);
                    for (auto& [c, v] : EA.row(a).entries()) ts.emplace_back(c * B.dim + b, v);
                    m.set_row(a * B.dim + b, SparseVec::from_terms(std::move(ts)));
                }
            T.E(i, j) = std::move(m);
        }
    return T;
}

// n-th exterior power. Basis: ascending n-subsets of A's basis indices, in
// lexicographic order of the index tuple.
inline ModuleRep wedge_power(const ModuleRep& A, int n) {
    if (n < 0 || n > A.dim) throw std::invalid_argument("wedge_power: bad degree");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < A.dim; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::map<std::vector<int>, int> index_of;
    for (size_t s = 0; s < subsets.size(); ++s) index_of[subsets[s]] = static_cast<int>(s);

    ModuleRep W;
    W.dim = static_cast<int>(subsets.size());
    W.wt.reserve(W.dim);
    for (auto& S : subsets) {
        Weight w;
        for (int b : S) w = w + A.wt[b];
        W.wt.push_back(w);
    }

    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            const SparseMat& EA = A.E(i, j);
            std::vector<std::vector<SparseVec::Entry>> cols(W.dim);
            for (int s = 0; s < W.dim; ++s) {
                const auto& S = subsets[s];
                for (int p = 0; p < n; ++p) {
                    // E acting in slot p: column S[p] of EA
                    for (int t = 0; t < A.dim; ++t) {
                        Rat c = EA.get(t, S[p]);
                        if (is_zero(c)) continue;
                        // replace S[p] by t, sort, sign by elements crossed
                        std::vector<int> R = S;
                        bool dup = false;
                        for (int q = 0; q < n; ++q)
                            if (q != p && R[q] == t) dup = true;
                        if (dup) continue;
                        R[p] = t;
                        int sign = 1;
                        for (int q = p; q + 1 < n && R[q] > R[q + 1]; ++q) {
                            std::swap(R[q], R[q + 1]);
                            sign = -sign;
                        }
                        for (int q = p; q > 0 && R[q] < R[q - 1]; --q) {
                            std::swap(R[q], R[q - 1]);
                            sign = -sign;
                        }
                        cols[index_of.at(R)].emplace_back(s, sign > 0 ? c : -c);
                    }
                }
            }
            SparseMat m(W.dim, W.dim);
            for (int r = 0; r < W.dim; ++r) m.set_row(r, SparseVec::from_terms(std::move(cols[r])));
            W.E(i, j) = std::move(m);
        }
    return W;
}

// Verifies the gl-commutation relations [E_ij, E_kl] = d_jk E_il - d_li E_kj
// (diagonal results expressed through the Cartan matrices) on every stored
// matrix. Returns an empty string on success, else a description.
inline std::string check_brackets(const ModuleRep& M) {
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= 5; ++k)
                for (int l = 1; l <= 5; ++l) {
                    if (k == l) continue;
                    SparseMat lhs = M.E(i, j).mul(M.E(k, l)).sub(M.E(k, l).mul(M.E(i, j)));
                    SparseMat rhs(M.dim, M.dim);
                    if (j == k && i == l) {
                        // E_ii - E_jj = sum of h_t over the span between i and j
                        int lo = std::min(i, j), hi = std::max(i, j);
                        int sgn = (i < j) ? 1 : -1;
                        for (int t = lo; t < hi; ++t)
                            rhs = rhs.add_scaled(Rat(sgn), M.cartan(t));
                    } else if (j == k) {
                        rhs = rhs.add_scaled(Rat(1), M.E(i, l));
                    } else if (i == l) {
                        rhs = rhs.add_scaled(Rat(-1), M.E(k, j));
                    }
                    if (!(lhs == rhs))
                        return "bracket mismatch at [E_" + std::to_string(i) + std::to_string(j) +
                               ", E_" + std::to_string(k) + std::to_string(l) + "]";
                }
        }
    return "";
}

// Exact matrix of the Casimir element c = (1/10)(sum h_i h_i^* + sum E_ij E_ji).
inline SparseMat casimir_matrix(const ModuleRep& M) {
    SparseMat acc(M.dim, M.dim);
    for (int b = 0; b < M.dim; ++b) {
        Rat s(0);
        for (int i = 1; i <= 4; ++i) s += Rat(M.wt[b][i - 1]) * dual_cartan_eval(i, M.wt[b]);
        acc.add_entry(b, b, s);
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            acc = acc.add_scaled(Rat(1), M.E(i, j).mul(M.E(j, i)));
        }
    acc.scale(rat(1, 10));
    return acc;
}

// Reduced-echelon basis of the space of maximal vectors of weight nu:
// vectors in the nu weight block killed by E_12, E_23, E_34, E_45.
// Returned in full-module coordinates.
inline std::vector<SparseVec> highest_weight_vectors(const ModuleRep& M, const Weight& nu) {
    auto blocks = M.blocks_by_weight();
    auto it = blocks.find(nu);
    if (it == blocks.end()) return {};
    const std::vector<int>& src = it->second;

    // Iteratively restrict the candidate space by each raising operator.
    std::vector<SparseVec> basis;  // columns of the current candidate space, in block coords
    for (size_t i = 0; i < src.size(); ++i) basis.push_back(SparseVec::unit(static_cast<int>(i)));
    for (int r = 1; r <= 4 && !basis.empty(); ++r) {
        Weight target = nu + simple_roots()[r - 1];
        auto jt = blocks.find(target);
        if (jt == blocks.end()) continue;  // operator is identically zero here
        SparseMat op = restrict_block(M.E(r, r + 1), jt->second, src);
        // matrix of op on the candidate space
        SparseMat span(static_cast<int>(op.rows()), static_cast<int>(basis.size()));
        for (size_t c = 0; c < basis.size(); ++c) {
            SparseVec img = op.apply(basis[c]);
            for (auto& [row, val] : img.entries()) span.add_entry(row, static_cast<int>(c), val);
        }
        std::vector<SparseVec> ker = kernel_basis(span);
        std::vector<SparseVec> next;
        for (auto& kv : ker) {
            SparseVec combo;
            for (auto& [c, v] : kv.entries()) combo.axpy(v, basis[c]);
            next.push_back(std::move(combo));
        }
        basis = std::move(next);
    }
    // expand to full-module coordinates and normalize
    std::vector<SparseVec> out;
    for (auto& v : basis) {
        std::vector<SparseVec::Entry> ts;
        for (auto& [c, val] : v.entries()) ts.emplace_back(src[c], val);
        out.push_back(SparseVec::from_terms(std::move(ts)));
    }
    return rref(out);
}

}  // namespace verma510
