#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "irrep.hpp"
#include "module.hpp"
#include "slots.hpp"

namespace verma510 {

// The natural module C^5: E_ij e_k = d_jk e_i.
inline ModuleRep natural_module() {
    ModuleRep M;
    M.dim = 5;
    for (int a = 1; a <= 5; ++a) M.wt.push_back(eps_weight(a));
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            SparseMat e(5, 5);
            e.add_entry(i - 1, j - 1, Rat(1));
            M.E(i, j) = std::move(e);
        }
    return M;
}

// W = V(omega_2) realized on the d_ij basis in the canonical product order
// d12, d13, d23, d14, d24, d34, d15, d25, d35, d45.
inline ModuleRep make_W() {
    ModuleRep W;
    W.dim = 10;
    for (int s = 0; s < 10; ++s) W.wt.push_back(pair_weight(s));
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            SparseMat e(10, 10);
            for (int s = 0; s < 10; ++s) {
                int k = kSlotPairs[s][0], l = kSlotPairs[s][1];
                // E (e_k ^ e_l) = d_jk e_i ^ e_l + d_jl e_k ^ e_i
                auto emit = [&](int a, int b, int sgn) {
                    if (a == b) return;
                    if (a > b) {
                        std::swap(a, b);
                        sgn = -sgn;
                    }
                    e.add_entry(slot_of(a, b), s, Rat(sgn));
                };
                if (j == k) emit(i, l, 1);
                if (j == l) emit(k, i, 1);
            }
            W.E(i, j) = std::move(e);
        }
    return W;
}

// ---------------------------------------------------------------------------
// Pieri rule.
// ---------------------------------------------------------------------------

// I(a, k): all (a1+c1-c2, a2+c2-c3, a3+c3-c4, a4+c4-c5) for c in N^5 with
// sum c = k and c_{s+1} <= a_s. Returned as a sorted set without multiplicity.
inline std::vector<std::array<int, 4>> pieri_index_set(const std::array<int, 4>& a, int k) {
    std::set<std::array<int, 4>> out;
    for (int c1 = 0; c1 <= k; ++c1)
        for (int c2 = 0; c2 <= std::min(a[0], k - c1); ++c2)
            for (int c3 = 0; c3 <= std::min(a[1], k - c1 - c2); ++c3)
                for (int c4 = 0; c4 <= std::min(a[2], k - c1 - c2 - c3); ++c4) {
                    int c5 = k - c1 - c2 - c3 - c4;
                    if (c5 < 0 || c5 > a[3]) continue;
                    out.insert({a[0] + c1 - c2, a[1] + c2 - c3, a[2] + c3 - c4, a[3] + c4 - c5});
                }
    return {out.begin(), out.end()};
}

enum class PieriSide { column_vector, dual };

// Multiplicity-free component list of V(omega_a) (x) V(k omega_1)
// (column_vector side) or V(omega_a) (x) V(k omega_4) (dual side).
inline std::vector<Weight> pieri_decompose(const Weight& a, int k, PieriSide side) {
    if (!a.dominant()) throw std::invalid_argument("pieri_decompose: non-dominant weight");
    std::vector<Weight> out;
    if (side == PieriSide::column_vector) {
        for (auto& b : pieri_index_set({a[0], a[1], a[2], a[3]}, k))
            out.emplace_back(b[0], b[1], b[2], b[3]);
    } else {
        for (auto& b : pieri_index_set({a[3], a[2], a[1], a[0]}, k))
            out.emplace_back(b[3], b[2], b[1], b[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition by maximal vectors.
// ---------------------------------------------------------------------------

struct DecompComponent {
    Weight hw;
    int multiplicity = 0;
    std::vector<SparseVec> maximal;  // echelon-normalized, module coordinates
};

struct DecompositionReport {
    long dim = 0;
    std::vector<DecompComponent> components;
};

// Full decomposition of a semisimple realized module into isotypic data by
// exhaustive maximal-vector search over dominant weight blocks.
inline DecompositionReport decompose_module(const ModuleRep& M) {
    DecompositionReport rep;
    rep.dim = M.dim;
    long total = 0;
    for (auto& [w, blk] : M.blocks_by_weight()) {
        if (!w.dominant()) continue;
        auto hw = highest_weight_vectors(M, w);
        if (hw.empty()) continue;
        DecompComponent c;
        c.hw = w;
        c.multiplicity = static_cast<int>(hw.size());
        c.maximal = std::move(hw);
        total += static_cast<long>(c.multiplicity) * weyl_dim(w);
        rep.components.push_back(std::move(c));
    }
    if (total != rep.dim)
        throw std::logic_error("decompose_module: dimension sum rule violated");
    return rep;
}

// Decomposition of Lambda^n W, W = V(omega_2) on the d_ij basis.
inline DecompositionReport wedge_decompose(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("wedge_decompose: n must be in 1..10");
    return decompose_module(wedge_power(make_W(), n));
}

// ---------------------------------------------------------------------------
// Multiplicity formula: dim { v in V(mu)_nu : E_{j,j+1}^{lambda_j + 1} v = 0 }.
// ---------------------------------------------------------------------------

inline int tensor_multiplicity(const Irrep& Vmu, const Weight& lambda, const Weight& nu) {
    if (!lambda.dominant())
        throw std::invalid_argument("tensor_multiplicity: lambda not dominant");
    if (!(lambda + nu).dominant())
        throw std::invalid_argument("tensor_multiplicity: lambda + mu_i = " + (lambda + nu).str() +
                                    " is not dominant");
    auto blocks = Vmu.rep.blocks_by_weight();
    auto it = blocks.find(nu);
    if (it == blocks.end()) return 0;
    const std::vector<int>& src = it->second;

    std::vector<SparseVec> basis;
    for (size_t i = 0; i < src.size(); ++i) basis.push_back(SparseVec::unit(static_cast<int>(i)));
    for (int j = 1; j <= 4 && !basis.empty(); ++j) {
        int power = lambda[j - 1] + 1;
        // chain of block restrictions along nu, nu + a_j, nu + 2 a_j, ...
        std::vector<SparseVec> images;  // current op images in block coords of step weight
        // represent candidate vectors in the source block, apply E power times
        std::vector<SparseVec> cur = basis;  // coords in block at step weight
        Weight wcur = nu;
        std::vector<int> cur_block = src;
        bool annihilated_all = false;
        for (int p = 0; p < power; ++p) {
            Weight wnext = wcur + simple_roots()[j - 1];
            auto jt = blocks.find(wnext);
            if (jt == blocks.end()) {
                annihilated_all = true;
                break;
            }
            SparseMat op = restrict_block(Vmu.rep.E(j, j + 1), jt->second, cur_block);
            for (auto& v : cur) v = op.apply(v);
            wcur = wnext;
            cur_block = jt->second;
        }
        if (annihilated_all) continue;
        SparseMat span(static_cast<int>(cur_block.size()), static_cast<int>(basis.size()));
        for (size_t c = 0; c < cur.size(); ++c)
            for (auto& [r, val] : cur[c].entries()) span.add_entry(r, static_cast<int>(c), val);
        std::vector<SparseVec> ker = kernel_basis(span);
        std::vector<SparseVec> next;
        for (auto& kv : ker) {
            SparseVec combo;
            for (auto& [c, v] : kv.entries()) combo.axpy(v, basis[c]);
            next.push_back(std::move(combo));
        }
        basis = rref(next);
    }
    return static_cast<int>(basis.size());
}

// ---------------------------------------------------------------------------
// Split Casimir and Casimir projectors.
// ---------------------------------------------------------------------------

// Matrix of c~ = (1/10)[ sum_i h_i (x) h_i^* + sum_{i != j} E_ij (x) E_ji ]
// on A (x) B with index (a, b) -> a * B.dim + b.
inline SparseMat split_casimir(const ModuleRep& A, const ModuleRep& B) {
    const int dim = A.dim * B.dim;
    SparseMat out(dim, dim);
    std::vector<std::vector<SparseVec::Entry>> rows(dim);
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) {
            Rat diag(0);
            for (int i = 1; i <= 4; ++i)
                diag += Rat(A.wt[a][i - 1]) * dual_cartan_eval(i, B.wt[b]);
            if (!is_zero(diag)) rows[a * B.dim + b].emplace_back(a * B.dim + b, diag);
        }
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            const SparseMat& EA = A.E(i, j);
            const SparseMat& EB = B.E(j, i);
            for (int a = 0; a < A.dim; ++a) {
                if (EA.row(a).empty()) continue;
                for (int b = 0; b < B.dim; ++b) {
                    if (EB.row(b).empty()) continue;
                    auto& sink = rows[a * B.dim + b];
                    for (auto& [ac, av] : EA.row(a).entries())
                        for (auto& [bc, bv] : EB.row(b).entries())
                            sink.emplace_back(ac * B.dim + bc, av * bv);
                }
            }
        }
    for (int r = 0; r < dim; ++r) {
        SparseVec v = SparseVec::from_terms(std::move(rows[r]));
        v.scale(rat(1, 10));
        out.set_row(r, std::move(v));
    }
    return out;
}

// chi_{sigma+lambda}(c~) by the generic inner-product formula.
inline Rat chi_generic(const Weight& mu, const Weight& lambda, const Weight& sigma) {
    Weight sl = sigma + lambda;
    Weight two_delta = delta_weight() + delta_weight();
    Rat a = killing_form(sl, sl + two_delta);
    Rat b = killing_form(mu, mu + two_delta);
    Rat c = killing_form(lambda, lambda + two_delta);
    return (a - b - c) / 2;
}

// chi_{sigma+lambda}(c~) by the explicit closed form, sigma = mu - sum k_i alpha_i.
inline Rat chi_explicit(const Weight& mu, const Weight& lambda, const RootCoords& k) {
    long l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];
    long m1 = mu[0], m2 = mu[1], m3 = mu[2], m4 = mu[3];
    Rat cross = Rat(l1 * (4 * m1 + 3 * m2 + 2 * m3 + m4) + l2 * (3 * m1 + 6 * m2 + 4 * m3 + 2 * m4) +
                    l3 * (2 * m1 + 4 * m2 + 6 * m3 + 3 * m4) +
                    l4 * (m1 + 2 * m2 + 3 * m3 + 4 * m4));
    cross /= 50;
    long k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3];
    long sq = k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4 - k1 * k2 - k2 * k3 - k3 * k4;
    long lin = k1 + k2 + k3 + k4;
    long mix = k1 * (l1 + m1) + k2 * (l2 + m2) + k3 * (l3 + m3) + k4 * (l4 + m4);
    return cross + Rat(sq - lin - mix) / 10;
}

// Distinct weights sigma of V(mu) with sigma - base a nonzero non-negative
// combination of simple roots and lambda + sigma dominant.
inline std::vector<Weight> sigma_range_above(const std::vector<Weight>& mu_weights,
                                             const Weight& base, const Weight& lambda) {
    std::set<Weight> distinct(mu_weights.begin(), mu_weights.end());
    std::vector<Weight> out;
    for (auto& s : distinct) {
        if (s == base) continue;
        auto k = root_coords_from_weight(s - base);
        if (!k) continue;
        if ((*k)[0] < 0 || (*k)[1] < 0 || (*k)[2] < 0 || (*k)[3] < 0) continue;
        if (!(lambda + s).dominant()) continue;
        out.push_back(s);
    }
    return out;
}

// Distinct chi values for the projector factors; throws on a collision with
// the target's chi (the projection formula is undefined there).
inline std::vector<Rat> projector_chis(const Weight& mu, const Weight& lambda,
                                       const Weight& target, const std::vector<Weight>& above) {
    Rat chi_t = chi_generic(mu, lambda, target);
    std::vector<Rat> chis;
    for (auto& s : above) {
        Rat cs = chi_generic(mu, lambda, s);
        if (cs == chi_t)
            throw std::invalid_argument("projector: chi collision between target " + target.str() +
                                        " and sigma = " + s.str());
        if (std::find(chis.begin(), chis.end(), cs) == chis.end()) chis.push_back(cs);
    }
    return chis;
}

// Full projector matrix prod_sigma (c~ - chi_sigma) / (chi_target - chi_sigma)
// on A (x) B. Weight-block diagonal; intended for small modules.
inline SparseMat projector(const ModuleRep& A, const ModuleRep& B, const Weight& mu,
                           const Weight& lambda, const Weight& target,
                           const std::vector<Weight>& above) {
    auto chis = projector_chis(mu, lambda, target, above);
    Rat chi_t = chi_generic(mu, lambda, target);
    SparseMat c = split_casimir(A, B);
    const int dim = A.dim * B.dim;
    SparseMat out = SparseMat::identity(dim);
    for (auto& cs : chis) {
        SparseMat step = c;
        for (int r = 0; r < dim; ++r) {
            SparseVec row = step.row(r);
            row.axpy(-cs, SparseVec::unit(r));
            row.scale(Rat(1) / (chi_t - cs));
            step.set_row(r, std::move(row));
        }
        out = step.mul(out);
    }
    return out;
}

// Projector applied to a single vector of A (x) B (repeated c~ application).
inline SparseVec projector_apply(const SparseMat& casimir, const Weight& mu, const Weight& lambda,
                                 const Weight& target, const std::vector<Weight>& above,
                                 SparseVec v) {
    auto chis = projector_chis(mu, lambda, target, above);
    Rat chi_t = chi_generic(mu, lambda, target);
    for (auto& cs : chis) {
        SparseVec cv = casimir.apply(v);
        cv.axpy(-cs, v);
        cv.scale(Rat(1) / (chi_t - cs));
        v = std::move(cv);
    }
    return v;
}

}  // namespace verma510
