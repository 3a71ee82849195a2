#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "module.hpp"

namespace verma510 {

inline constexpr long kDefaultDimCap = 10000;

namespace detail {

// One exterior-power factor Lambda^k C^5 of the ambient tensor product.
struct WedgeFactor {
    int degree;
    std::vector<std::vector<int>> basis;  // ascending k-subsets of {1..5}, lex order
    std::vector<Weight> wt;
    // columns of E_{ij}: col[i-1][j-1][b] = list of (target, coeff sign)
    std::vector<std::pair<int, int>> cols[5][5][10];  // at most C(5,2)=10 basis elements
    int hw_index = 0;

    explicit WedgeFactor(int k) : degree(k) {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == k) {
                basis.push_back(cur);
                return;
            }
            for (int a = start; a <= 5; ++a) {
                cur.push_back(a);
                self(self, a + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
        std::map<std::vector<int>, int> index_of;
        for (size_t s = 0; s < basis.size(); ++s) index_of[basis[s]] = static_cast<int>(s);
        for (auto& S : basis) {
            Weight w;
            for (int a : S) w = w + eps_weight(a);
            wt.push_back(w);
        }
        std::vector<int> hw;
        for (int a = 1; a <= k; ++a) hw.push_back(a);
        hw_index = index_of.at(hw);

        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                if (i == j) continue;
                for (size_t s = 0; s < basis.size(); ++s) {
                    const auto& S = basis[s];
                    for (int p = 0; p < k; ++p) {
                        if (S[p] != j) continue;  // E_ij e_a = d_ja e_i
                        bool dup = false;
                        for (int q = 0; q < k; ++q)
                            if (q != p && S[q] == i) dup = true;
                        if (dup) continue;
                        std::vector<int> R = S;
                        R[p] = i;
                        int sign = 1;
                        for (int q = p; q + 1 < k && R[q] > R[q + 1]; ++q) {
                            std::swap(R[q], R[q + 1]);
                            sign = -sign;
                        }
                        for (int q = p; q > 0 && R[q] < R[q - 1]; --q) {
                            std::swap(R[q], R[q - 1]);
                            sign = -sign;
                        }
                        cols[i - 1][j - 1][s].emplace_back(index_of.at(R), sign);
                    }
                }
            }
    }
};

// The ambient module (L^1)^{l1} x (L^2)^{l2} x (L^3)^{l3} x (L^4)^{l4}
// with mixed-radix indexing, most significant factor first.
struct Ambient {
    std::vector<const WedgeFactor*> factors;
    std::vector<long> stride;
    long dim = 1;

    explicit Ambient(const Weight& lambda) {
        static const WedgeFactor f1(1), f2(2), f3(3), f4(4);
        const WedgeFactor* fs[4] = {&f1, &f2, &f3, &f4};
        for (int k = 0; k < 4; ++k)
            for (int c = 0; c < lambda[k]; ++c) factors.push_back(fs[k]);
        stride.assign(factors.size(), 1);
        for (int p = static_cast<int>(factors.size()) - 2; p >= 0; --p)
            stride[p] = stride[p + 1] * factors[p + 1]->basis.size();
        for (auto* f : factors) dim *= static_cast<long>(f->basis.size());
    }

    long hw_index() const {
        long idx = 0;
        for (size_t p = 0; p < factors.size(); ++p) idx += stride[p] * factors[p]->hw_index;
        return idx;
    }

    Weight weight_of(long idx) const {
        Weight w;
        for (size_t p = 0; p < factors.size(); ++p) {
            long d = idx / stride[p];
            idx %= stride[p];
            w = w + factors[p]->wt[d];
        }
        return w;
    }

    // E_{ij} by the Leibniz rule.
    SparseVec apply(int i, int j, const SparseVec& v) const {
        std::vector<SparseVec::Entry> out;
        for (auto& [idx, coeff] : v.entries()) {
            long rest = idx;
            for (size_t p = 0; p < factors.size(); ++p) {
                long d = rest / stride[p];
                rest %= stride[p];
                for (auto& [t, sign] : factors[p]->cols[i - 1][j - 1][d]) {
                    long target = idx + (t - d) * stride[p];
                    out.emplace_back(static_cast<int>(target), sign > 0 ? coeff : -coeff);
                }
            }
        }
        return SparseVec::from_terms(std::move(out));
    }
};

// Per-weight-space triangular elimination with coordinate tracking.
struct SpanTracker {
    std::map<int, int> pivot_row;        // ambient pivot index -> row
    std::vector<SparseVec> rows;         // pivot-normalized reduced vectors
    std::vector<SparseVec> combos;       // rows[r] as a combination of local basis vectors
    int local_count = 0;

    // Returns the local combination if v lies in the current span, else nullopt
    // (after which `residual`/`residual_combo` hold the reduced remainder).
    std::optional<SparseVec> reduce(SparseVec v, SparseVec combo_init, SparseVec* residual,
                                    SparseVec* residual_combo) const {
        SparseVec combo = std::move(combo_init);
        while (!v.empty()) {
            auto it = pivot_row.find(v.leading_index());
            if (it == pivot_row.end()) break;
            Rat c = v.leading_coeff();
            v.axpy(-c, rows[it->second]);
            combo.axpy(-c, combos[it->second]);
        }
        if (v.empty()) {
            combo.scale(Rat(-1));
            return combo;  // v = sum combo * basis
        }
        if (residual) *residual = std::move(v);
        if (residual_combo) *residual_combo = std::move(combo);
        return std::nullopt;
    }

    // Attempts to add v as a new local basis vector; true if independent.
    bool add(const SparseVec& v) {
        SparseVec res, res_combo;
        auto in_span =
            reduce(v, SparseVec::unit(local_count), &res, &res_combo);
        if (in_span) return false;
        Rat inv = Rat(1) / res.leading_coeff();
        res.scale(inv);
        res_combo.scale(inv);
        pivot_row[res.leading_index()] = static_cast<int>(rows.size());
        rows.push_back(std::move(res));
        combos.push_back(std::move(res_combo));
        ++local_count;
        return true;
    }

    // Coordinates of v in the local basis; throws if v is outside the span.
    SparseVec express(const SparseVec& v) const {
        auto combo = reduce(v, SparseVec(), nullptr, nullptr);
        if (!combo) throw std::logic_error("SpanTracker::express: vector outside span");
        return *combo;
    }
};

}  // namespace detail

struct Irrep {
    Weight lambda;
    ModuleRep rep;
    int hw_index = 0;  // basis index of the highest weight vector
};

// Realizes V(lambda) as the cyclic span of the product of highest-weight
// vectors inside (L^1 C^5)^{l1} x (L^2 C^5)^{l2} x (L^3 C^5)^{l3} x (L^4 C^5)^{l4}
// under repeated application of f_1..f_4. Deterministic basis: weights by
// ascending root height (ties: lexicographic root coordinates), first-seen
// generation order within a weight space.
inline Irrep build_irrep(const Weight& lambda, long cap = kDefaultDimCap,
                         bool with_matrices = true) {
    if (!lambda.dominant())
        throw std::invalid_argument("build_irrep: weight " + lambda.str() + " is not dominant");
    long wd = weyl_dim(lambda);
    if (wd > cap)
        throw std::invalid_argument("build_irrep: dim V" + lambda.str() + " = " +
                                    std::to_string(wd) + " exceeds dimension cap " +
                                    std::to_string(cap));

    Irrep out;
    out.lambda = lambda;

    if (lambda == Weight()) {
        out.rep.dim = 1;
        out.rep.wt = {Weight()};
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j)
                if (i != j) out.rep.E(i, j) = SparseMat(1, 1);
        out.hw_index = 0;
        return out;
    }

    detail::Ambient amb(lambda);

    struct Gen {
        SparseVec vec;
        Weight wt;
        RootCoords k;
        int seen;
    };
    std::vector<Gen> accepted;
    std::map<Weight, detail::SpanTracker> spans;

    SparseVec hw = SparseVec::unit(static_cast<int>(amb.hw_index()));
    spans[lambda].add(hw);
    accepted.push_back({hw, lambda, RootCoords(), 0});

    for (size_t head = 0; head < accepted.size(); ++head) {
        // copy: accepted may reallocate while we append
        SparseVec v = accepted[head].vec;
        Weight w = accepted[head].wt;
        RootCoords kk = accepted[head].k;
        for (int f = 1; f <= 4; ++f) {
            SparseVec img = amb.apply(f + 1, f, v);
            if (img.empty()) continue;
            Weight w2 = w - simple_roots()[f - 1];
            if (spans[w2].add(img)) {
                RootCoords k2 = kk;
                k2[f - 1] += 1;
                accepted.push_back({std::move(img), w2, k2, static_cast<int>(accepted.size())});
            }
        }
    }

    if (static_cast<long>(accepted.size()) != wd)
        throw std::logic_error("build_irrep: generated dimension " +
                               std::to_string(accepted.size()) + " != Weyl dimension " +
                               std::to_string(wd));

    std::vector<int> order(accepted.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ha = accepted[a].k.height(), hb = accepted[b].k.height();
        if (ha != hb) return ha < hb;
        if (accepted[a].k != accepted[b].k) return accepted[a].k < accepted[b].k;
        return accepted[a].seen < accepted[b].seen;
    });

    out.rep.dim = static_cast<int>(accepted.size());
    out.rep.wt.reserve(out.rep.dim);
    for (int b = 0; b < out.rep.dim; ++b) out.rep.wt.push_back(accepted[order[b]].wt);
    out.hw_index = 0;  // height 0 sorts first and is unique

    if (!with_matrices) return out;

    // local index maps per weight space, in final basis order
    std::map<Weight, std::vector<int>> final_of_local;  // local slot -> final index
    {
        // local slots were assigned in first-seen order during generation
        std::map<Weight, int> counter;
        std::vector<int> local_of_accepted(accepted.size());
        for (size_t i = 0; i < accepted.size(); ++i)
            local_of_accepted[i] = counter[accepted[i].wt]++;
        for (int b = 0; b < out.rep.dim; ++b) {
            int acc = order[b];
            auto& lst = final_of_local[accepted[acc].wt];
            int local = local_of_accepted[acc];
            if (static_cast<int>(lst.size()) <= local) lst.resize(local + 1, -1);
            lst[local] = b;
        }
    }

    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            std::vector<std::vector<SparseVec::Entry>> rows(out.rep.dim);
            Weight shift = eps_weight(i) - eps_weight(j);
            for (int b = 0; b < out.rep.dim; ++b) {
                const Gen& g = accepted[order[b]];
                SparseVec img = amb.apply(i, j, g.vec);
                if (img.empty()) continue;
                Weight tw = g.wt + shift;
                auto it = spans.find(tw);
                if (it == spans.end())
                    throw std::logic_error("build_irrep: image weight space missing");
                SparseVec local = it->second.express(img);
                const auto& f = final_of_local.at(tw);
                for (auto& [l, c] : local.entries()) rows[f[l]].emplace_back(b, c);
            }
            SparseMat m(out.rep.dim, out.rep.dim);
            for (int r = 0; r < out.rep.dim; ++r)
                m.set_row(r, SparseVec::from_terms(std::move(rows[r])));
            out.rep.E(i, j) = std::move(m);
        }
    return out;
}

inline int weight_multiplicity(const Irrep& V, const Weight& nu) {
    int n = 0;
    for (auto& w : V.rep.wt)
        if (w == nu) ++n;
    return n;
}

// A Verma-basis label (a_1..a_10).
struct VermaLabel {
    std::array<int, 10> a{};
    auto operator<=>(const VermaLabel&) const = default;
};

// All labels for the weight space lambda - sum k_i alpha_i, in ascending
// lexicographic order of (a_1, ..., a_10).
inline std::vector<VermaLabel> verma_basis_labels(const Weight& lambda, const RootCoords& k) {
    if (!lambda.dominant())
        throw std::invalid_argument("verma_basis_labels: non-dominant weight");
    const int m1 = lambda[0], m2 = lambda[1], m3 = lambda[2], m4 = lambda[3];
    const int k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3];
    std::vector<VermaLabel> out;
    if (k1 < 0 || k2 < 0 || k3 < 0 || k4 < 0) return out;
    for (int a1 = 0; a1 <= std::min(m1, k1); ++a1)
        for (int a2 = 0; a2 <= std::min(m2 + a1, k2); ++a2)
            for (int a3 = 0; a3 <= std::min({m2, a2, k1 - a1}); ++a3)
                for (int a4 = 0; a4 <= std::min(m3 + a2, k3); ++a4)
                    for (int a5 = 0; a5 <= std::min({m3 + a3, a4, k2 - a2}); ++a5)
                        for (int a6 = 0; a6 <= std::min({m3, a5, k1 - a1 - a3}); ++a6) {
                            int a7 = k4;
                            if (a7 > m4 + a4) continue;
                            int a8 = k3 - a4;
                            if (a8 < 0 || a8 > std::min(m4 + a5, a7)) continue;
                            int a9 = k2 - a2 - a5;
                            if (a9 < 0 || a9 > std::min(m4 + a6, a8)) continue;
                            int a10 = k1 - a1 - a3 - a6;
                            if (a10 < 0 || a10 > std::min(m4, a9)) continue;
                            VermaLabel l;
                            l.a = {a1, a2, a3, a4, a5, a6, a7, a8, a9, a10};
                            out.push_back(l);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

// Applies the f-monomial of a Verma label to the highest weight vector,
// in module coordinates. Rightmost factor first:
// f1^{a1}, f2^{a2}, f1^{a3}, f3^{a4}, f2^{a5}, f1^{a6}, f4^{a7}, f3^{a8}, f2^{a9}, f1^{a10}.
inline SparseVec verma_vector(const Irrep& V, const VermaLabel& l) {
    static const int gen[10] = {1, 2, 1, 3, 2, 1, 4, 3, 2, 1};
    SparseVec v = SparseVec::unit(V.hw_index);
    for (int step = 0; step < 10; ++step) {
        const SparseMat& f = V.rep.E(gen[step] + 1, gen[step]);
        for (int rep = 0; rep < l.a[step]; ++rep) v = f.apply(v);
    }
    return v;
}

// Verma vectors for one weight space; throws if they fail to form a basis.
inline std::vector<SparseVec> verma_vectors_at(const Irrep& V, const RootCoords& k) {
    auto labels = verma_basis_labels(V.lambda, k);
    std::vector<SparseVec> vecs;
    for (auto& l : labels) vecs.push_back(verma_vector(V, l));
    auto reduced = rref(vecs);
    if (reduced.size() != vecs.size())
        throw std::logic_error("verma_vectors_at: mapped Verma vectors are dependent at k-height " +
                               std::to_string(k.height()));
    return vecs;
}

}  // namespace verma510
