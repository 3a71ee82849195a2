#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "irrep.hpp"
#include "module.hpp"
#include "slots.hpp"

namespace verma510 {

// ---------------------------------------------------------------------------
// GVM monomials d^n del^m (x) v and their linear combinations.
// ---------------------------------------------------------------------------

struct GvmBasisElement {
    std::array<uint8_t, 5> m{0, 0, 0, 0, 0};
    uint16_t n = 0;
    int32_t v = 0;

    int mtotal() const { return m[0] + m[1] + m[2] + m[3] + m[4]; }
    int ntotal() const { return std::popcount(static_cast<unsigned>(n)); }
    int degree() const { return 2 * mtotal() + ntotal(); }

    auto operator<=>(const GvmBasisElement&) const = default;

    uint64_t pack() const {
        uint64_t key = 0;
        for (int i = 0; i < 5; ++i) key = key * 32 + m[i];
        key = (key << 10) | n;
        key = (key << 20) | static_cast<uint32_t>(v);
        return key;
    }
};

// Degree-slice ordering: |m| ascending, m lexicographic, n ascending, v ascending.
inline bool slice_order_less(const GvmBasisElement& a, const GvmBasisElement& b) {
    int ma = a.mtotal(), mb = b.mtotal();
    if (ma != mb) return ma < mb;
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.v < b.v;
}

// t_i(n) of the weight formula.
inline std::array<int, 4> t_of_n(uint16_t n) {
    auto bit = [&](int i, int j) { return (n >> slot_of(i, j)) & 1; };
    std::array<int, 4> t;
    t[0] = bit(1, 3) + bit(1, 4) + bit(1, 5) - bit(2, 3) - bit(2, 4) - bit(2, 5);
    t[1] = bit(1, 2) + bit(2, 4) + bit(2, 5) - bit(1, 3) - bit(3, 4) - bit(3, 5);
    t[2] = bit(1, 3) + bit(2, 3) + bit(3, 5) - bit(1, 4) - bit(2, 4) - bit(4, 5);
    t[3] = bit(1, 4) + bit(2, 4) + bit(3, 4) - bit(1, 5) - bit(2, 5) - bit(3, 5);
    return t;
}

inline Weight gvm_weight(const GvmBasisElement& b, const std::vector<Weight>& vwt) {
    auto t = t_of_n(b.n);
    const Weight& nu = vwt[b.v];
    Weight w;
    for (int i = 0; i < 4; ++i) w[i] = b.m[i + 1] - b.m[i] + t[i] + nu[i];
    return w;
}

struct GvmElement {
    Weight lambda;
    std::map<GvmBasisElement, Rat> terms;

    bool zero() const { return terms.empty(); }

    void add_term(const GvmBasisElement& b, const Rat& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    void axpy(const Rat& c, const GvmElement& o) {
        for (auto& [b, val] : o.terms) add_term(b, c * val);
    }

    void scale(const Rat& c) {
        if (is_zero(c)) {
            terms.clear();
            return;
        }
        for (auto& [b, val] : terms) val *= c;
    }

    // Scales so the first coefficient in slice order becomes 1.
    void normalize_leading() {
        if (terms.empty()) return;
        const GvmBasisElement* lead = nullptr;
        for (auto& [b, c] : terms)
            if (!lead || slice_order_less(b, *lead)) lead = &b;
        Rat inv = Rat(1) / terms.at(*lead);
        scale(inv);
    }

    bool operator==(const GvmElement& o) const {
        return lambda == o.lambda && terms == o.terms;
    }
};

// ---------------------------------------------------------------------------
// Degree slices M_k.
// ---------------------------------------------------------------------------

struct Slice {
    int k = 0;
    std::vector<GvmBasisElement> basis;             // in slice order
    std::unordered_map<uint64_t, int> index;        // pack() -> position
    std::map<Weight, std::vector<int>> blocks;      // weight -> positions

    int find(const GvmBasisElement& b) const {
        auto it = index.find(b.pack());
        return it == index.end() ? -1 : it->second;
    }
};

inline void enumerate_m_vectors(int total, std::vector<std::array<uint8_t, 5>>& out) {
    std::array<uint8_t, 5> m{};
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == 4) {
            m[4] = static_cast<uint8_t>(rem);
            out.push_back(m);
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            m[pos] = static_cast<uint8_t>(x);
            self(self, pos + 1, rem - x);
        }
    };
    rec(rec, 0, total);
}

inline Slice build_slice(const Irrep& V, int k) {
    Slice s;
    s.k = k;
    for (int mt = 0; 2 * mt <= k; ++mt) {
        int nt = k - 2 * mt;
        if (nt > 10) continue;
        std::vector<std::array<uint8_t, 5>> ms;
        enumerate_m_vectors(mt, ms);
        std::vector<uint16_t> masks;
        for (uint32_t n = 0; n < 1024; ++n)
            if (std::popcount(n) == nt) masks.push_back(static_cast<uint16_t>(n));
        for (auto& m : ms)
            for (uint16_t n : masks)
                for (int v = 0; v < V.rep.dim; ++v) {
                    GvmBasisElement b;
                    b.m = m;
                    b.n = n;
                    b.v = v;
                    s.basis.push_back(b);
                }
    }
    s.index.reserve(s.basis.size() * 2);
    for (size_t i = 0; i < s.basis.size(); ++i) {
        s.index.emplace(s.basis[i].pack(), static_cast<int>(i));
        s.blocks[gvm_weight(s.basis[i], V.rep.wt)].push_back(static_cast<int>(i));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Operator realizations (term rules on monomials).
// ---------------------------------------------------------------------------

namespace detail {

// Column cache of the E_{ij} matrices of a module.
struct EColumns {
    int dim = 0;
    std::vector<std::pair<int, Rat>> col[5][5];  // flattened: col[i][j] + offsets
    std::vector<int> off[5][5];

    EColumns() = default;
    explicit EColumns(const ModuleRep& M) : dim(M.dim) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                if (i == j) continue;
                std::vector<std::vector<std::pair<int, Rat>>> cols(M.dim);
                const SparseMat& e = M.E(i + 1, j + 1);
                for (int r = 0; r < M.dim; ++r)
                    for (auto& [c, val] : e.row(r).entries()) cols[c].emplace_back(r, val);
                off[i][j].assign(M.dim + 1, 0);
                for (int c = 0; c < M.dim; ++c) off[i][j][c + 1] = off[i][j][c] + cols[c].size();
                col[i][j].reserve(off[i][j][M.dim]);
                for (int c = 0; c < M.dim; ++c)
                    for (auto& t : cols[c]) col[i][j].push_back(t);
            }
    }

    // Entries of column v of E_{ij} (1-based i, j).
    std::pair<const std::pair<int, Rat>*, const std::pair<int, Rat>*> column(int i, int j,
                                                                             int v) const {
        const auto& o = off[i - 1][j - 1];
        const auto& c = col[i - 1][j - 1];
        return {c.data() + o[v], c.data() + o[v + 1]};
    }
};

}  // namespace detail

using TermList = std::vector<std::pair<GvmBasisElement, Rat>>;

// All formula-realized operators of the theory, bound to one V(lambda).
class GvmOps {
  public:
    explicit GvmOps(const Irrep& V) : V_(&V), cols_(V.rep) {}

    const Irrep& irrep() const { return *V_; }

    // --- element-level wrappers -------------------------------------------

    GvmElement apply(const std::string& name, const GvmElement& x) const {
        GvmElement out;
        out.lambda = x.lambda;
        for (auto& [b, c] : x.terms) apply_term(name, b, c, out);
        return out;
    }

    GvmElement xprime0(int i, int j, const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_xprime0(i, j, b, c, out);
        });
    }
    GvmElement x0(int i, int j, const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_x0(i, j, b, c, out);
        });
    }
    GvmElement xm2(int i, const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_xm2(i, b, c, out);
        });
    }
    // Full Borel raising x_i d/dx_{i+1} (i in 1..4).
    GvmElement raising(int i, const GvmElement& x) const {
        GvmElement out = x0(i, i + 1, x);
        if (i == 3 || i == 4) out.axpy(Rat(1), xm2(i, x));
        return out;
    }
    GvmElement P(const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_P(b, c, out);
        });
    }
    GvmElement exp_minus_half_P(const GvmElement& x) const {
        GvmElement out = x;
        GvmElement cur = x;
        Rat fact(1);
        for (int j = 1;; ++j) {
            cur = P(cur);
            if (cur.zero()) break;
            fact *= rat(-1, 2 * j);
            out.axpy(fact, cur);
        }
        return out;
    }
    GvmElement x5d45_p1(const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_x5d45_p1(b, c, out);
        });
    }
    GvmElement x5d45_m1(const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_x5d45_m1(b, c, out);
        });
    }
    GvmElement x5d45_m3(const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_x5d45_m3(b, c, out);
        });
    }
    GvmElement x5d45(const GvmElement& x) const {
        GvmElement out = x5d45_p1(x);
        out.axpy(Rat(1), x5d45_m1(x));
        out.axpy(Rat(1), x5d45_m3(x));
        return out;
    }
    // Split Casimir on the wedge-times-V model (1/10 normalization).
    GvmElement ctilde(const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& out) {
            term_ctilde(b, c, out);
        });
    }
    // Rank-(w1+w2) tensor operator components; (j,k,l) distinct, any order.
    GvmElement T(int i, int j, int k, int l, const GvmElement& x) const {
        int sign = 1;
        if (j == k || j == l || k == l) return GvmElement{x.lambda, {}};
        if (i == j || i == k || i == l)
            throw std::invalid_argument("T: first index must differ from the triple");
        // sort (j,k,l) ascending, tracking the permutation sign
        int a[3] = {j, k, l};
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2 - p; ++q)
                if (a[q] > a[q + 1]) {
                    std::swap(a[q], a[q + 1]);
                    sign = -sign;
                }
        GvmElement out = wrap(x, [&](const GvmBasisElement& b, const Rat& c, GvmElement& o) {
            term_T_sorted(i, a[0], a[1], a[2], b, c, o);
        });
        if (sign < 0) out.scale(Rat(-1));
        return out;
    }

    // --- bracket-derived oracle -------------------------------------------

    // Action of x_a d/dx_b (the L0 element) computed by normal ordering in
    // U(L_-), with all reordering signs and [d,d] corrections explicit.
    GvmElement bracket_L0(int a, int b, const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& t, const Rat& c, GvmElement& out) {
            term_bracket_L0(a, b, t, c, out);
        });
    }
    GvmElement bracket_x5d45(const GvmElement& x) const {
        return wrap(x, [&](const GvmBasisElement& t, const Rat& c, GvmElement& out) {
            term_bracket_x5d45(t, c, out);
        });
    }

    // --- matrices of operators between slice blocks ------------------------

    // Matrix of `op` from the source positions of `src` (columns) into the
    // whole target slice restricted to `target_rows` (rows). Every nonzero
    // image term must land in the target block.
    SparseMat block_matrix(const std::function<GvmElement(const GvmElement&)>& op,
                           const Slice& src_slice, const std::vector<int>& src_pos,
                           const Slice& dst_slice, const std::vector<int>& dst_pos) const {
        std::unordered_map<uint64_t, int> row_of;
        row_of.reserve(dst_pos.size() * 2);
        for (size_t r = 0; r < dst_pos.size(); ++r)
            row_of.emplace(dst_slice.basis[dst_pos[r]].pack(), static_cast<int>(r));
        SparseMat out(static_cast<int>(dst_pos.size()), static_cast<int>(src_pos.size()));
        std::vector<std::vector<SparseVec::Entry>> rows(dst_pos.size());
        for (size_t c = 0; c < src_pos.size(); ++c) {
            GvmElement unit;
            unit.lambda = V_->lambda;
            unit.add_term(src_slice.basis[src_pos[c]], Rat(1));
            GvmElement img = op(unit);
            for (auto& [bb, val] : img.terms) {
                auto it = row_of.find(bb.pack());
                if (it == row_of.end())
                    throw std::logic_error("block_matrix: image term outside target block");
                rows[it->second].emplace_back(static_cast<int>(c), val);
            }
        }
        for (size_t r = 0; r < dst_pos.size(); ++r)
            out.set_row(static_cast<int>(r), SparseVec::from_terms(std::move(rows[r])));
        return out;
    }

  private:
    const Irrep* V_;
    detail::EColumns cols_;

    template <class F>
    GvmElement wrap(const GvmElement& x, F&& f) const {
        GvmElement out;
        out.lambda = x.lambda;
        for (auto& [b, c] : x.terms) f(b, c, out);
        return out;
    }

    void emit_Ev(int i, int j, const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        auto [lo, hi] = cols_.column(i, j, b.v);
        for (auto* p = lo; p != hi; ++p) {
            GvmBasisElement t = b;
            t.v = p->first;
            out.add_term(t, c * p->second);
        }
    }

    // (x_i d/dx_j)'_0 = sum_{k != i,j} (-1)^{|ki,kj|} y_{ki} d/dy_{kj}
    // with the exterior orientation y_{ab} = -y_{ba}: a lone index reversal
    // (k strictly between i and j) contributes -1.
    void term_xprime0(int i, int j, const GvmBasisElement& b, const Rat& c,
                      GvmElement& out) const {
        for (int k = 1; k <= 5; ++k) {
            if (k == i || k == j) continue;
            int s_src = slot_of(k, j), s_dst = slot_of(k, i);
            if (!((b.n >> s_src) & 1)) continue;
            uint16_t n1 = static_cast<uint16_t>(b.n & ~(1u << s_src));
            if ((n1 >> s_dst) & 1) continue;
            int sgn = sign_between(s_dst, s_src, b.n);
            if ((k > i) != (k > j)) sgn = -sgn;
            GvmBasisElement t = b;
            t.n = static_cast<uint16_t>(n1 | (1u << s_dst));
            out.add_term(t, sgn > 0 ? c : -c);
        }
    }

    // (x_i d/dx_j)_0 = -z_j d/dz_i + (x_i d/dx_j)'_0 + E_ij
    void term_x0(int i, int j, const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        if (b.m[i - 1] > 0) {
            GvmBasisElement t = b;
            t.m[i - 1] -= 1;
            t.m[j - 1] += 1;
            out.add_term(t, c * Rat(-static_cast<long>(b.m[i - 1])));
        }
        term_xprime0(i, j, b, c, out);
        emit_Ev(i, j, b, c, out);
    }

    // (x_3 d/dx_4)_{-2} and (x_4 d/dx_5)_{-2}
    void term_xm2(int i, const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        auto two_del_one_z = [&](int sa, int sb, int zi, int sgn_extra) {
            // z_{zi} d/dy_{sa} d/dy_{sb}; sa != sb
            if (!((b.n >> sa) & 1) || !((b.n >> sb) & 1)) return;
            GvmBasisElement t = b;
            t.n = static_cast<uint16_t>(b.n & ~(1u << sa) & ~(1u << sb));
            t.m[zi - 1] += 1;
            out.add_term(t, sgn_extra > 0 ? c : -c);
        };
        if (i == 3) {
            two_del_one_z(slot_of(1, 4), slot_of(2, 4), 5, 1);
        } else if (i == 4) {
            two_del_one_z(slot_of(2, 5), slot_of(3, 5), 1, 1);
            two_del_one_z(slot_of(1, 5), slot_of(3, 5), 2,
                          -sign_between(slot_of(1, 5), slot_of(3, 5), b.n));
            two_del_one_z(slot_of(1, 5), slot_of(2, 5), 3, 1);
        }
    }

    // P = sum eps_{m i j k l} (-1)^{|ij,kl|} z_m d/dy_{ij} d/dy_{kl}
    void term_P(const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        for (int s1 = 0; s1 < 10; ++s1) {
            if (!((b.n >> s1) & 1)) continue;
            for (int s2 = s1 + 1; s2 < 10; ++s2) {
                if (!((b.n >> s2) & 1)) continue;
                int i = kSlotPairs[s1][0], j = kSlotPairs[s1][1];
                int k = kSlotPairs[s2][0], l = kSlotPairs[s2][1];
                int zi = 1 + 2 + 3 + 4 + 5 - i - j - k - l;
                int eps = epsilon(zi, i, j, k, l);
                if (eps == 0) continue;
                int sgn = eps * sign_between(s1, s2, b.n);
                GvmBasisElement t = b;
                t.n = static_cast<uint16_t>(b.n & ~(1u << s1) & ~(1u << s2));
                t.m[zi - 1] += 1;
                out.add_term(t, sgn > 0 ? c : -c);
            }
        }
    }

    // (x5 d45)_1 = (-1)^{1+|45|} d/dz_5 y_45
    void term_x5d45_p1(const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        int s45 = slot_of(4, 5);
        if ((b.n >> s45) & 1) return;
        if (b.m[4] == 0) return;
        GvmBasisElement t = b;
        t.n = static_cast<uint16_t>(b.n | (1u << s45));
        t.m[4] -= 1;
        int sgn = -sign_before(s45, b.n);
        Rat coeff = c * Rat(static_cast<long>(b.m[4]));
        out.add_term(t, sgn > 0 ? coeff : -coeff);
    }

    void term_x5d45_m1(const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        const int s12 = slot_of(1, 2), s13 = slot_of(1, 3), s23 = slot_of(2, 3);
        const int s14 = slot_of(1, 4), s24 = slot_of(2, 4), s34 = slot_of(3, 4);
        const int s15 = slot_of(1, 5), s25 = slot_of(2, 5), s35 = slot_of(3, 5);
        const int s45 = slot_of(4, 5);
        auto del = [&](uint16_t n, int s) { return static_cast<uint16_t>(n & ~(1u << s)); };
        auto has = [&](uint16_t n, int s) { return ((n >> s) & 1) != 0; };

        // z_a d/dz_5 d/dy_s with sign
        auto z_dz5_dy = [&](int s, int a, int sgn) {
            if (!has(b.n, s) || b.m[4] == 0) return;
            GvmBasisElement t = b;
            t.n = del(b.n, s);
            t.m[4] -= 1;
            t.m[a - 1] += 1;
            Rat coeff = c * Rat(static_cast<long>(b.m[4]));
            out.add_term(t, sgn > 0 ? coeff : -coeff);
        };
        z_dz5_dy(s12, 3, -1);
        z_dz5_dy(s13, 2, sign_before(s13, b.n));
        z_dz5_dy(s23, 1, -sign_before(s23, b.n));

        // d/dy_s E_{5a} with sign
        auto dy_E = [&](int s, int a, int sgn) {
            if (!has(b.n, s)) return;
            GvmBasisElement t = b;
            t.n = del(b.n, s);
            emit_Ev(5, a, t, sgn > 0 ? c : -c, out);
        };
        dy_E(s12, 3, 1);
        dy_E(s13, 2, -sign_before(s13, b.n));
        dy_E(s23, 1, sign_before(s23, b.n));

        // y_{s_add} d/dy_{sa} d/dy_{sb} with sign
        auto y_dy_dy = [&](int s_add, int sa, int sb, int sgn) {
            if (!has(b.n, sa) || !has(b.n, sb)) return;
            uint16_t n1 = del(del(b.n, sa), sb);
            if (has(n1, s_add)) return;
            GvmBasisElement t = b;
            t.n = static_cast<uint16_t>(n1 | (1u << s_add));
            out.add_term(t, sgn > 0 ? c : -c);
        };
        y_dy_dy(s15, s12, s13, sign_between(s13, s15, b.n));
        y_dy_dy(s25, s12, s23, sign_between(s23, s25, b.n));
        y_dy_dy(s35, s13, s23, sign_before(s13, b.n) * sign_between(s23, s35, b.n));
        y_dy_dy(s45, s12, s34, -sign_between(s34, s45, b.n));
        y_dy_dy(s45, s23, s14, -sign_before(s23, b.n) * sign_between(s14, s45, b.n));
        y_dy_dy(s45, s13, s24, sign_before(s13, b.n) * sign_between(s24, s45, b.n));
    }

    void term_x5d45_m3(const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        const int s12 = slot_of(1, 2), s13 = slot_of(1, 3), s23 = slot_of(2, 3);
        const int s14 = slot_of(1, 4), s24 = slot_of(2, 4), s34 = slot_of(3, 4);
        auto has = [&](int s) { return ((b.n >> s) & 1) != 0; };
        auto z_dy3 = [&](int a, int sa, int sb, int sc, int sgn) {
            if (!has(sa) || !has(sb) || !has(sc)) return;
            GvmBasisElement t = b;
            t.n = static_cast<uint16_t>(b.n & ~(1u << sa) & ~(1u << sb) & ~(1u << sc));
            t.m[a - 1] += 1;
            out.add_term(t, sgn > 0 ? c : -c);
        };
        z_dy3(1, s12, s23, s34, sign_between(s23, s34, b.n));
        z_dy3(1, s13, s23, s24, -sign_between(s23, s24, b.n) * sign_before(s13, b.n));
        z_dy3(2, s13, s23, s14, sign_before(s13, b.n));
        z_dy3(2, s12, s13, s34, -sign_between(s13, s34, b.n));
        z_dy3(3, s12, s13, s24, sign_between(s13, s24, b.n));
        z_dy3(3, s12, s23, s14, -1);
        z_dy3(4, s12, s13, s23, -1);
    }

    // c~ = (1/10)[ sum_i t_i(n) h_i^*(v)  +  sum_{i != j} (x_i d/dx_j)'_0 E_ji ]
    void term_ctilde(const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        auto t = t_of_n(b.n);
        Rat diag(0);
        const Weight& nu = V_->rep.wt[b.v];
        for (int i = 1; i <= 4; ++i)
            if (t[i - 1] != 0) diag += Rat(t[i - 1]) * dual_cartan_eval(i, nu);
        out.add_term(b, c * diag / 10);
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                if (i == j) continue;
                // y-part then E_{ji} on v
                GvmElement ypart;
                ypart.lambda = V_->lambda;
                term_xprime0(i, j, b, c / 10, ypart);
                for (auto& [bb, cc] : ypart.terms) emit_Ev(j, i, bb, cc, out);
            }
    }

    // T_{i,jkl} for ascending j < k < l:
    //   [E_ij + (1/2)(x_i d/dx_j)'_0] (-1)^{|kl|} d/dy_{kl}
    // + [E_ik + (1/2)(x_i d/dx_k)'_0] (-1)^{1+|jl|} d/dy_{jl}
    // + [E_il + (1/2)(x_i d/dx_l)'_0] (-1)^{|jk|} d/dy_{jk}
    void term_T_sorted(int i, int j, int k, int l, const GvmBasisElement& b, const Rat& c,
                       GvmElement& out) const {
        struct Part {
            int e_to;   // E_{i,e_to}
            int s_del;  // derivative slot
            int extra;  // +1 or -1
        };
        const Part parts[3] = {{j, slot_of(k, l), 1}, {k, slot_of(j, l), -1}, {l, slot_of(j, k), 1}};
        for (auto& p : parts) {
            if (!((b.n >> p.s_del) & 1)) continue;
            GvmBasisElement mid = b;
            mid.n = static_cast<uint16_t>(b.n & ~(1u << p.s_del));
            int sgn = p.extra * sign_before(p.s_del, mid.n);
            Rat cc = sgn > 0 ? c : -c;
            emit_Ev(i, p.e_to, mid, cc, out);
            term_xprime0(i, p.e_to, mid, cc / 2, out);
        }
    }

    // ---- bracket oracle ----------------------------------------------------

    // Normalizes coeff * del^m d_{seq} v with seq an arbitrary slot sequence.
    void normalize_word(Rat coeff, std::array<uint8_t, 5> m, std::vector<int> seq, int v,
                        GvmElement& out) const {
        for (size_t t = 0; t + 1 < seq.size(); ++t) {
            if (seq[t] < seq[t + 1]) continue;
            if (seq[t] == seq[t + 1]) return;  // d^2 = 0 (repeated-index bracket vanishes)
            // swap branch
            std::vector<int> swapped = seq;
            std::swap(swapped[t], swapped[t + 1]);
            normalize_word(-coeff, m, std::move(swapped), v, out);
            // bracket branch: [d_p, d_q] = eps * del_e
            int p = seq[t], q = seq[t + 1];
            int e = 15 - kSlotPairs[p][0] - kSlotPairs[p][1] - kSlotPairs[q][0] - kSlotPairs[q][1];
            int eps = epsilon(e, kSlotPairs[p][0], kSlotPairs[p][1], kSlotPairs[q][0],
                              kSlotPairs[q][1]);
            if (eps != 0) {
                std::vector<int> rest;
                rest.reserve(seq.size() - 2);
                for (size_t u = 0; u < seq.size(); ++u)
                    if (u != t && u != t + 1) rest.push_back(seq[u]);
                std::array<uint8_t, 5> m2 = m;
                m2[e - 1] += 1;
                normalize_word(eps > 0 ? coeff : -coeff, m2, std::move(rest), v, out);
            }
            return;
        }
        GvmBasisElement b;
        b.m = m;
        uint16_t n = 0;
        for (int s : seq) n |= static_cast<uint16_t>(1u << s);
        b.n = n;
        b.v = v;
        out.add_term(b, coeff);
    }

    static std::vector<int> slots_of(uint16_t n) {
        std::vector<int> s;
        for (int i = 0; i < 10; ++i)
            if ((n >> i) & 1) s.push_back(i);
        return s;
    }

    void term_bracket_L0(int a, int bb, const GvmBasisElement& b, const Rat& c,
                         GvmElement& out) const {
        // through the del's: [x_a d/dx_b, del_a] = -del_b
        if (b.m[a - 1] > 0 && a != bb) {
            GvmBasisElement t = b;
            t.m[a - 1] -= 1;
            t.m[bb - 1] += 1;
            out.add_term(t, c * Rat(-static_cast<long>(b.m[a - 1])));
        }
        // through the d's: [x_a d/dx_b, d_kl] = d_bk d_al - d_bl d_ak
        auto slots = slots_of(b.n);
        for (size_t p = 0; p < slots.size(); ++p) {
            int kk = kSlotPairs[slots[p]][0], ll = kSlotPairs[slots[p]][1];
            auto replace = [&](int x, int y, int repl_sign) {
                // new factor d_xy at position p
                if (x == y) return;
                int sgn = repl_sign;
                if (x > y) {
                    std::swap(x, y);
                    sgn = -sgn;
                }
                std::vector<int> seq;
                seq.reserve(slots.size());
                for (size_t u = 0; u < slots.size(); ++u)
                    seq.push_back(u == p ? slot_of(x, y) : slots[u]);
                normalize_word(sgn > 0 ? c : -c, b.m, std::move(seq), b.v, out);
            };
            if (bb == kk) replace(a, ll, 1);
            if (bb == ll) replace(a, kk, -1);
        }
        // on v
        emit_Ev(a, bb, b, c, out);
    }

    void term_bracket_x5d45(const GvmBasisElement& b, const Rat& c, GvmElement& out) const {
        // through del_5: contributes -m5 del^{m-e5} d45 d^n v
        if (b.m[4] > 0) {
            std::vector<int> seq;
            seq.push_back(slot_of(4, 5));
            for (int s : slots_of(b.n)) seq.push_back(s);
            std::array<uint8_t, 5> m2 = b.m;
            m2[4] -= 1;
            normalize_word(c * Rat(-static_cast<long>(b.m[4])), m2, std::move(seq), b.v, out);
        }
        // crossing the d's (odd past odd): sign per crossed factor; the bracket
        // [x5 d45, d_s] is an L0 element x5 d/dx_j that keeps moving right.
        auto slots = slots_of(b.n);
        for (size_t p = 0; p < slots.size(); ++p) {
            int cross = (p % 2 == 0) ? 1 : -1;
            int j = 0, br_sign = 0;
            if (slots[p] == slot_of(1, 2)) {
                j = 3;
                br_sign = 1;
            } else if (slots[p] == slot_of(1, 3)) {
                j = 2;
                br_sign = -1;
            } else if (slots[p] == slot_of(2, 3)) {
                j = 1;
                br_sign = 1;
            } else {
                continue;
            }
            Rat base = c * Rat(cross * br_sign);
            // x5 d/dx_j acts on the suffix d's and on v; the prefix is fixed.
            // suffix replacements: [x5 d/dx_j, d_kl] = d_jk d_5l - d_jl d_k5
            for (size_t q = p + 1; q < slots.size(); ++q) {
                int kk = kSlotPairs[slots[q]][0], ll = kSlotPairs[slots[q]][1];
                auto replace = [&](int x, int y, int repl_sign) {
                    if (x == y) return;
                    int sgn = repl_sign;
                    if (x > y) {
                        std::swap(x, y);
                        sgn = -sgn;
                    }
                    std::vector<int> seq;
                    for (size_t u = 0; u < slots.size(); ++u) {
                        if (u == p) continue;
                        seq.push_back(u == q ? slot_of(x, y) : slots[u]);
                    }
                    normalize_word(sgn > 0 ? base : -base, b.m, std::move(seq), b.v, out);
                };
                if (j == kk) replace(5, ll, 1);
                if (j == ll) replace(5, kk, -1);
            }
            // on v: E_{5j}
            GvmBasisElement t = b;
            t.n = static_cast<uint16_t>(b.n & ~(1u << slots[p]));
            emit_Ev(5, j, t, base, out);
        }
    }

    void apply_term(const std::string& name, const GvmBasisElement& b, const Rat& c,
                    GvmElement& out) const {
        if (name == "P") {
            term_P(b, c, out);
        } else if (name == "x5d45_p1") {
            term_x5d45_p1(b, c, out);
        } else if (name == "x5d45_m1") {
            term_x5d45_m1(b, c, out);
        } else if (name == "x5d45_m3") {
            term_x5d45_m3(b, c, out);
        } else if (name == "ctilde") {
            term_ctilde(b, c, out);
        } else if (name.rfind("x0:", 0) == 0 && name.size() == 6) {
            term_x0(name[3] - '0', name[5] - '0', b, c, out);
        } else if (name.rfind("xm2:", 0) == 0 && name.size() == 5) {
            term_xm2(name[4] - '0', b, c, out);
        } else {
            throw std::invalid_argument("apply_named: unknown operator '" + name + "'");
        }
    }
};

}  // namespace verma510
