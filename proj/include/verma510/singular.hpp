#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gvm.hpp"
#include "tensor.hpp"

namespace verma510 {

using GvmOp = std::function<GvmElement(const GvmElement&)>;

// ---------------------------------------------------------------------------
// Joint kernels of operators restricted to a monomial block.
// ---------------------------------------------------------------------------

// Echelon-normalized basis (coordinates over `block`, ascending pivots) of the
// joint kernel of `ops_list` on the span of `block`. Restriction is iterated:
// each operator is applied to the surviving subspace only.
inline std::vector<SparseVec> joint_kernel_block(const Weight& lambda,
                                                 const std::vector<GvmBasisElement>& block,
                                                 const std::vector<GvmOp>& ops_list) {
    std::vector<SparseVec> coords;  // candidate basis, coordinates over block
    std::vector<GvmElement> vecs;
    for (size_t i = 0; i < block.size(); ++i) {
        coords.push_back(SparseVec::unit(static_cast<int>(i)));
        GvmElement u;
        u.lambda = lambda;
        u.add_term(block[i], Rat(1));
        vecs.push_back(std::move(u));
    }
    for (auto& op : ops_list) {
        if (coords.empty()) break;
        std::map<GvmBasisElement, int> row_of;
        std::vector<std::vector<SparseVec::Entry>> cols(coords.size());
        for (size_t c = 0; c < coords.size(); ++c) {
            GvmElement img = op(vecs[c]);
            for (auto& [b, val] : img.terms) {
                auto [it, fresh] = row_of.emplace(b, static_cast<int>(row_of.size()));
                cols[c].emplace_back(it->second, val);
            }
        }
        SparseMat m(static_cast<int>(row_of.size()), static_cast<int>(coords.size()));
        for (size_t c = 0; c < coords.size(); ++c)
            for (auto& [r, v] : cols[c]) m.add_entry(r, static_cast<int>(c), v);
        std::vector<SparseVec> ker = kernel_basis(m);
        std::vector<SparseVec> next_coords;
        std::vector<GvmElement> next_vecs;
        for (auto& kv : ker) {
            SparseVec combo;
            GvmElement elt;
            elt.lambda = lambda;
            for (auto& [c, v] : kv.entries()) {
                combo.axpy(v, coords[c]);
                elt.axpy(v, vecs[c]);
            }
            next_coords.push_back(std::move(combo));
            next_vecs.push_back(std::move(elt));
        }
        coords = rref(next_coords);
        next_vecs.clear();
        for (auto& cv : coords) {
            GvmElement elt;
            elt.lambda = lambda;
            for (auto& [c, v] : cv.entries()) {
                GvmElement u;
                u.lambda = lambda;
                u.add_term(block[c], Rat(1));
                elt.axpy(v, u);
            }
            next_vecs.push_back(std::move(elt));
        }
        vecs = std::move(next_vecs);
    }
    return coords;
}

inline std::vector<GvmElement> coords_to_elements(const Weight& lambda,
                                                  const std::vector<GvmBasisElement>& block,
                                                  const std::vector<SparseVec>& coords) {
    std::vector<GvmElement> out;
    for (auto& cv : coords) {
        GvmElement elt;
        elt.lambda = lambda;
        for (auto& [c, v] : cv.entries()) elt.add_term(block[c], v);
        out.push_back(std::move(elt));
    }
    return out;
}

// ---------------------------------------------------------------------------
// is_singular and the exhaustive kernel search.
// ---------------------------------------------------------------------------

inline bool is_singular(const GvmOps& ops, const GvmElement& xi) {
    if (xi.zero()) throw std::invalid_argument("is_singular: zero vector");
    for (int i = 1; i <= 4; ++i)
        if (!ops.raising(i, xi).zero()) return false;
    return ops.x5d45(xi).zero();
}

struct SingularWeightGroup {
    Weight wt;
    std::vector<GvmElement> basis;  // echelon-normalized over the weight block
};

struct SingularReport {
    Weight lambda;
    int degree = 0;
    std::vector<SingularWeightGroup> kernel;
    std::vector<bool> construction_matches;
};

inline void fill_construction_matches(SingularReport& rep, const Irrep& V, const GvmOps& ops);

// All singular vectors of degree k: per dominant weight block of M_k, the
// joint kernel of the four full Borel raisings and x5 d45. Maximal weight
// vectors in a finite-dimensional sl5-module have dominant weight, so only
// dominant blocks can contribute.
inline SingularReport find_singular(const Irrep& V, const GvmOps& ops, int k, int threads = 1) {
    if (k < 1) throw std::invalid_argument("find_singular: degree must be >= 1");
    SingularReport rep;
    rep.lambda = V.lambda;
    rep.degree = k;
    Slice s = build_slice(V, k);

    std::vector<GvmOp> five_ops;
    for (int i = 1; i <= 4; ++i)
        five_ops.push_back([&ops, i](const GvmElement& x) { return ops.raising(i, x); });
    five_ops.push_back([&ops](const GvmElement& x) { return ops.x5d45(x); });

    std::vector<std::pair<Weight, const std::vector<int>*>> work;
    for (auto& [w, blk] : s.blocks)
        if (w.dominant()) work.emplace_back(w, &blk);

    std::vector<std::vector<GvmElement>> results(work.size());
    auto run = [&](size_t idx) {
        std::vector<GvmBasisElement> block;
        block.reserve(work[idx].second->size());
        for (int pos : *work[idx].second) block.push_back(s.basis[pos]);
        auto coords = joint_kernel_block(V.lambda, block, five_ops);
        results[idx] = coords_to_elements(V.lambda, block, coords);
    };
    if (threads <= 1) {
        for (size_t i = 0; i < work.size(); ++i) run(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) run(i);
            });
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < work.size(); ++i)
        if (!results[i].empty()) rep.kernel.push_back({work[i].first, std::move(results[i])});
    fill_construction_matches(rep, V, ops);
    return rep;
}

// ---------------------------------------------------------------------------
// Leading terms, lifts and the closed-form constructions.
// ---------------------------------------------------------------------------

// All sl5-maximal vectors of the degree-n wedge-model slice (m = 0) that are
// annihilated by the leading-term operator T_{5,123}.
inline std::vector<GvmElement> leading_term_solve(const Irrep& V, const GvmOps& ops, int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("leading_term_solve: degree must be in 1..4");
    std::map<Weight, std::vector<GvmBasisElement>> blocks;
    std::vector<uint16_t> masks;
    for (uint32_t mask = 0; mask < 1024; ++mask)
        if (std::popcount(mask) == n) masks.push_back(static_cast<uint16_t>(mask));
    for (uint16_t mask : masks)
        for (int v = 0; v < V.rep.dim; ++v) {
            GvmBasisElement b;
            b.n = mask;
            b.v = v;
            blocks[gvm_weight(b, V.rep.wt)].push_back(b);
        }
    std::vector<GvmOp> ops_list;
    for (int i = 1; i <= 4; ++i)
        ops_list.push_back([&ops, i](const GvmElement& x) { return ops.x0(i, i + 1, x); });
    ops_list.push_back([&ops](const GvmElement& x) { return ops.T(5, 1, 2, 3, x); });

    std::vector<GvmElement> out;
    for (auto& [w, blk] : blocks) {
        if (!w.dominant()) continue;
        auto coords = joint_kernel_block(V.lambda, blk, ops_list);
        for (auto& e : coords_to_elements(V.lambda, blk, coords)) out.push_back(std::move(e));
    }
    return out;
}

// exp(-P/2) lift of a leading term; the result must be singular.
inline GvmElement lift_leading(const GvmOps& ops, const GvmElement& leading) {
    GvmElement lifted = ops.exp_minus_half_P(leading);
    if (!is_singular(ops, lifted))
        throw std::logic_error("lift_leading: lifted vector is not singular "
                               "(operator-sign inconsistency)");
    return lifted;
}

// Casimir projector applied in the wedge-model: prod over distinct chi of
// (c~ - chi_sigma) / (chi_target - chi_sigma), sigma over the distinct weights
// of V(mu) above `target` with lambda + sigma dominant.
inline GvmElement casimir_project(const GvmOps& ops, const Weight& mu,
                                  const std::vector<Weight>& mu_weights, const Weight& target,
                                  const Weight& lambda, GvmElement seed) {
    auto above = sigma_range_above(mu_weights, target, lambda);
    auto chis = projector_chis(mu, lambda, target, above);
    Rat chi_t = chi_generic(mu, lambda, target);
    for (auto& cs : chis) {
        GvmElement img = ops.ctilde(seed);
        img.axpy(-cs, seed);
        img.scale(Rat(1) / (chi_t - cs));
        seed = std::move(img);
    }
    return seed;
}

enum class Family { thm53_1, thm53_2, thm53_3, thm54, thm55, thm56 };

inline std::optional<Family> family_from_string(const std::string& s) {
    if (s == "thm5.3-1") return Family::thm53_1;
    if (s == "thm5.3-2") return Family::thm53_2;
    if (s == "thm5.3-3") return Family::thm53_3;
    if (s == "thm5.4") return Family::thm54;
    if (s == "thm5.5") return Family::thm55;
    if (s == "thm5.6") return Family::thm56;
    return std::nullopt;
}

inline int family_degree(Family f) {
    switch (f) {
        case Family::thm53_1:
        case Family::thm53_2:
        case Family::thm53_3: return 1;
        case Family::thm54: return 2;
        case Family::thm55: return 3;
        case Family::thm56: return 4;
    }
    return 0;
}

inline GvmElement construct_closed_form(const Irrep& V, const GvmOps& ops, Family family) {
    const Weight& l = V.lambda;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok)
            throw std::invalid_argument("construct_closed_form: lambda " + l.str() +
                                        " violates " + what);
    };
    auto monomial = [&](std::initializer_list<int> slots) {
        GvmElement e;
        e.lambda = l;
        GvmBasisElement b;
        for (int s : slots) b.n |= static_cast<uint16_t>(1u << s);
        b.v = V.hw_index;
        e.add_term(b, Rat(1));
        return e;
    };
    switch (family) {
        case Family::thm53_1: {
            require(l[2] == 0 && l[3] == 0, "lambda = (m, n, 0, 0)");
            return monomial({slot_of(1, 2)});
        }
        case Family::thm53_2: {
            require(l[1] == 0 && l[2] == 0 && l[3] >= 1, "lambda = (m, 0, 0, n), n >= 1");
            return casimir_project(ops, Weight(0, 1, 0, 0), make_W().wt,
                                   pair_weight(slot_of(1, 5)), l, monomial({slot_of(1, 5)}));
        }
        case Family::thm53_3: {
            require(l[0] == 0 && l[1] == 0 && l[2] >= 1, "lambda = (0, 0, m, n), m >= 1");
            return casimir_project(ops, Weight(0, 1, 0, 0), make_W().wt,
                                   pair_weight(slot_of(4, 5)), l, monomial({slot_of(4, 5)}));
        }
        case Family::thm54: {
            require(l[1] == 0 && l[2] == 0 && l[3] == 1, "lambda = (m, 0, 0, 1)");
            ModuleRep L2 = wedge_power(make_W(), 2);  // = V(omega_1 + omega_3)
            Weight target = pair_weight(slot_of(1, 2)) + pair_weight(slot_of(1, 5));
            return casimir_project(ops, Weight(1, 0, 1, 0), L2.wt, target, l,
                                   monomial({slot_of(1, 2), slot_of(1, 5)}));
        }
        case Family::thm55: {
            require(l[0] == 0 && l[1] == 0 && l[2] >= 1 && l[3] >= 2,
                    "lambda = (0, 0, m, n), m >= 1, n >= 2");
            static const std::vector<Weight> mu_weights = [] {
                Irrep mu = build_irrep(Weight(2, 0, 0, 1));
                std::vector<Weight> w = mu.rep.wt;
                return w;
            }();
            Weight target = pair_weight(slot_of(1, 5)) + pair_weight(slot_of(2, 5)) +
                            pair_weight(slot_of(4, 5));
            GvmElement projected =
                casimir_project(ops, Weight(2, 0, 0, 1), mu_weights, target, l,
                                monomial({slot_of(1, 5), slot_of(2, 5), slot_of(4, 5)}));
            return ops.exp_minus_half_P(projected);
        }
        case Family::thm56: {
            require(l[1] == 0 && l[2] == 0 && l[3] == 0, "lambda = (m, 0, 0, 0)");
            return monomial({slot_of(1, 2), slot_of(1, 3), slot_of(1, 4), slot_of(1, 5)});
        }
    }
    throw std::logic_error("construct_closed_form: unreachable");
}

// Families whose parameter set contains lambda, at the given degree.
inline std::vector<Family> applicable_families(const Weight& l, int degree) {
    std::vector<Family> out;
    if (degree == 1) {
        if (l[2] == 0 && l[3] == 0) out.push_back(Family::thm53_1);
        if (l[1] == 0 && l[2] == 0 && l[3] >= 1) out.push_back(Family::thm53_2);
        if (l[0] == 0 && l[1] == 0 && l[2] >= 1) out.push_back(Family::thm53_3);
    } else if (degree == 2) {
        if (l[1] == 0 && l[2] == 0 && l[3] == 1) out.push_back(Family::thm54);
    } else if (degree == 3) {
        if (l[0] == 0 && l[1] == 0 && l[2] >= 1 && l[3] >= 2) out.push_back(Family::thm55);
    } else if (degree == 4) {
        if (l[1] == 0 && l[2] == 0 && l[3] == 0) out.push_back(Family::thm56);
    }
    return out;
}

// Scalar-normalized membership: does `candidate` lie in the span reported for
// its weight (up to scalar it must reduce to zero against the echelon basis)?
inline bool kernel_contains(const SingularReport& rep, const GvmElement& candidate) {
    if (candidate.zero()) return false;
    for (auto& grp : rep.kernel) {
        if (grp.basis.empty()) continue;
        // reduce the candidate against the group's echelon basis
        std::map<GvmBasisElement, Rat> work(candidate.terms.begin(), candidate.terms.end());
        for (auto& bv : grp.basis) {
            const GvmBasisElement* lead = nullptr;
            for (auto& [b, c] : bv.terms)
                if (!lead || slice_order_less(b, *lead)) lead = &b;
            auto it = work.find(*lead);
            if (it == work.end()) continue;
            Rat factor = it->second / bv.terms.at(*lead);
            for (auto& [b, c] : bv.terms) {
                auto jt = work.emplace(b, Rat(0)).first;
                jt->second -= factor * c;
                if (is_zero(jt->second)) work.erase(jt);
            }
        }
        if (work.empty()) return true;
    }
    return false;
}

// For every family whose parameter set contains lambda at this degree, checks
// that the closed-form construction is found by the kernel search.
inline void fill_construction_matches(SingularReport& rep, const Irrep& V, const GvmOps& ops) {
    for (Family f : applicable_families(V.lambda, rep.degree)) {
        GvmElement cf = construct_closed_form(V, ops, f);
        rep.construction_matches.push_back(kernel_contains(rep, cf));
    }
}

// ---------------------------------------------------------------------------
// l_mu solutions and the S' sets.
// ---------------------------------------------------------------------------

// Echelon basis of { l in the V(mu)-component of L^n W : E12 l = E23 l =
// E34 l = 0, E45^{m+1} l = 0 }, in L^n W coordinates.
inline std::vector<SparseVec> solve_l_mu(const Weight& mu, int m) {
    ModuleRep W = make_W();
    for (int n = 1; n <= 10; ++n) {
        ModuleRep Wn = wedge_power(W, n);
        auto hw = highest_weight_vectors(Wn, mu);
        if (hw.empty()) continue;
        // generate the component by lowerings (multiplicity-free per Table 2)
        std::vector<SparseVec> span;
        std::map<int, int> pivot_row;
        auto reduce_add = [&](SparseVec v) -> bool {
            while (!v.empty()) {
                auto it = pivot_row.find(v.leading_index());
                if (it == pivot_row.end()) break;
                Rat c = v.leading_coeff();
                v.axpy(-c, span[it->second]);
            }
            if (v.empty()) return false;
            v.normalize_leading();
            pivot_row[v.leading_index()] = static_cast<int>(span.size());
            span.push_back(std::move(v));
            return true;
        };
        std::vector<SparseVec> queue = {hw[0]};
        reduce_add(hw[0]);
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int f = 1; f <= 4; ++f) {
                SparseVec img = Wn.E(f + 1, f).apply(queue[head]);
                if (img.empty()) continue;
                if (reduce_add(img)) queue.push_back(std::move(img));
            }
        }
        // conditions inside the component
        std::vector<SparseVec> cand = queue;  // independent by construction
        std::vector<SparseVec> coords;
        for (size_t i = 0; i < cand.size(); ++i) coords.push_back(SparseVec::unit(static_cast<int>(i)));
        auto restrict_by = [&](const std::function<SparseVec(const SparseVec&)>& op) {
            SparseMat mcols(Wn.dim, static_cast<int>(cand.size()));
            for (size_t c = 0; c < cand.size(); ++c) {
                SparseVec img = op(cand[c]);
                for (auto& [r, v] : img.entries()) mcols.add_entry(r, static_cast<int>(c), v);
            }
            auto ker = kernel_basis(mcols);
            std::vector<SparseVec> nc, nv;
            for (auto& kv : ker) {
                SparseVec combo, vec;
                for (auto& [c, v] : kv.entries()) {
                    combo.axpy(v, coords[c]);
                    vec.axpy(v, cand[c]);
                }
                nc.push_back(std::move(combo));
                nv.push_back(std::move(vec));
            }
            coords = std::move(nc);
            cand = std::move(nv);
        };
        for (int j = 1; j <= 3 && !cand.empty(); ++j)
            restrict_by([&](const SparseVec& v) { return Wn.E(j, j + 1).apply(v); });
        if (!cand.empty())
            restrict_by([&](const SparseVec& v) {
                SparseVec img = v;
                for (int rep = 0; rep < m + 1; ++rep) img = Wn.E(4, 5).apply(img);
                return img;
            });
        return rref(cand);
    }
    throw std::invalid_argument("solve_l_mu: " + mu.str() +
                                " is not a wedge-power component weight");
}

struct SPrimeSet {
    int m = 0, n = 0;
    std::vector<GvmElement> members;  // in the trivial-V model
};

// Highest weight vectors of V(m omega_4) (x) L^n W filtered by the two
// leading-term compatibility conditions, probed against V(1,1,1,1).
inline SPrimeSet compute_S_prime(int m, int n, const Irrep& trivial, const GvmOps& triv_ops,
                                 const Irrep& probe, const GvmOps& probe_ops) {
    if (trivial.rep.dim != 1)
        throw std::invalid_argument("compute_S_prime: first module must be V(0)");
    SPrimeSet out;
    out.m = m;
    out.n = n;
    if (n > 10) return out;

    // blocks of the (m, n) graded piece over the trivial module
    std::map<Weight, std::vector<GvmBasisElement>> blocks;
    std::vector<std::array<uint8_t, 5>> ms;
    enumerate_m_vectors(m, ms);
    for (auto& mm : ms)
        for (uint32_t mask = 0; mask < 1024; ++mask) {
            if (std::popcount(mask) != n) continue;
            GvmBasisElement b;
            b.m = mm;
            b.n = static_cast<uint16_t>(mask);
            b.v = 0;
            blocks[gvm_weight(b, trivial.rep.wt)].push_back(b);
        }
    std::vector<GvmOp> raisings;
    for (int i = 1; i <= 4; ++i)
        raisings.push_back(
            [&triv_ops, i](const GvmElement& x) { return triv_ops.x0(i, i + 1, x); });

    auto second_condition = [&](const GvmElement& x) {
        GvmElement out2 = probe_ops.x5d45_m3(x);
        out2.axpy(rat(-1, 2), probe_ops.x5d45_m1(probe_ops.P(x)));
        out2.axpy(rat(1, 8), probe_ops.x5d45_p1(probe_ops.P(probe_ops.P(x))));
        return out2;
    };

    for (auto& [w, blk] : blocks) {
        if (!w.dominant()) continue;
        auto coords = joint_kernel_block(trivial.lambda, blk, raisings);
        for (auto& e : coords_to_elements(trivial.lambda, blk, coords)) {
            // condition 1: the (x5 d45)_1 part kills e (x) v; it has no action
            // on the V factor, so the trivial model decides it
            if (!triv_ops.x5d45_p1(e).zero()) continue;
            // condition 2 must hold for every v in the probe module
            bool ok = true;
            for (int v = 0; v < probe.rep.dim && ok; ++v) {
                GvmElement ev;
                ev.lambda = probe.lambda;
                for (auto& [b, c] : e.terms) {
                    GvmBasisElement nb = b;
                    nb.v = v;
                    ev.add_term(nb, c);
                }
                if (!second_condition(ev).zero()) ok = false;
            }
            if (ok) out.members.push_back(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification scan.
// ---------------------------------------------------------------------------

struct KrEntry {
    Weight lambda;
    bool skipped_cap = false;
    long dim = 0;
    std::vector<int> singular_counts;  // per degree 1..K
    bool degenerate = false;
    bool conjectured = false;
    bool trivial = false;
};

struct KrReport {
    int bound = 0;
    int max_degree = 0;
    std::vector<KrEntry> entries;
    bool consistent = true;  // degenerate set == conjectured set on the grid
};

inline bool conjecture_contains(const Weight& l) {
    bool fam1 = l[2] == 0 && l[3] == 0;
    bool fam2 = l[1] == 0 && l[2] == 0;
    bool fam3 = l[0] == 0 && l[1] == 0;
    return fam1 || fam2 || fam3;
}

inline KrReport kr_verify(int bound, int max_degree, long cap = kDefaultDimCap,
                          int threads = 1) {
    KrReport rep;
    rep.bound = bound;
    rep.max_degree = max_degree;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c)
                for (int d = 0; d <= bound; ++d) {
                    Weight l(a, b, c, d);
                    KrEntry e;
                    e.lambda = l;
                    e.dim = weyl_dim(l);
                    e.conjectured = conjecture_contains(l);
                    e.trivial = (l == Weight());
                    if (e.dim > cap) {
                        e.skipped_cap = true;
                        rep.entries.push_back(std::move(e));
                        continue;
                    }
                    Irrep V = build_irrep(l, cap);
                    GvmOps ops(V);
                    for (int k = 1; k <= max_degree; ++k) {
                        SingularReport sr = find_singular(V, ops, k, threads);
                        int count = 0;
                        for (auto& g : sr.kernel) count += static_cast<int>(g.basis.size());
                        e.singular_counts.push_back(count);
                        if (count > 0) e.degenerate = true;
                    }
                    rep.entries.push_back(std::move(e));
                }
    for (auto& e : rep.entries)
        if (!e.skipped_cap && e.degenerate != e.conjectured) rep.consistent = false;
    return rep;
}

}  // namespace verma510
