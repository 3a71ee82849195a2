#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "verma510/gvm.hpp"
#include "verma510/tensor.hpp"

using namespace verma510;

namespace {

GvmElement unit_elt(const Irrep& V, std::array<uint8_t, 5> m, uint16_t n, int v) {
    GvmElement e;
    e.lambda = V.lambda;
    GvmBasisElement b;
    b.m = m;
    b.n = n;
    b.v = v;
    e.add_term(b, Rat(1));
    return e;
}

using OpFn = std::function<GvmElement(const GvmElement&)>;

// Compares two operator realizations on every basis monomial of slice k.
void compare_on_slice(const Irrep& V, const GvmOps& ops, int k, const OpFn& a, const OpFn& b) {
    Slice s = build_slice(V, k);
    for (auto& mono : s.basis) {
        GvmElement u;
        u.lambda = V.lambda;
        u.add_term(mono, Rat(1));
        GvmElement ia = a(u), ib = b(u);
        if (!(ia == ib)) {
            CAPTURE(static_cast<int>(mono.m[0]), static_cast<int>(mono.m[4]), mono.n, mono.v, k);
            REQUIRE(ia == ib);
        }
    }
}

GvmElement commutator(const OpFn& a, const OpFn& b, const GvmElement& x) {
    GvmElement out = a(b(x));
    out.axpy(Rat(-1), b(a(x)));
    return out;
}

}  // namespace

TEST_CASE("permutation signs") {
    CHECK(epsilon(1, 2, 3, 4, 5) == 1);
    CHECK(epsilon(5, 1, 2, 3, 4) == 1);
    CHECK(epsilon(2, 1, 3, 4, 5) == -1);
    CHECK(epsilon(1, 1, 3, 4, 5) == 0);
}

TEST_CASE("odd bracket") {
    std::array<int, 5> one{0, 0, 0, 0, 0};
    auto r = odd_bracket(one, 1, 2, one, 3, 4);
    REQUIRE(r.nonzero);
    CHECK(r.sign == 1);
    CHECK(r.deriv == 5);
    CHECK(!odd_bracket(one, 1, 2, one, 1, 3).nonzero);
    std::array<int, 5> x5{0, 0, 0, 0, 1};
    auto s = odd_bracket(x5, 4, 5, one, 1, 2);
    REQUIRE(s.nonzero);
    CHECK(s.sign == 1);
    CHECK(s.deriv == 3);
    CHECK(s.fg == x5);
}

TEST_CASE("slice enumeration counts") {
    Irrep triv = build_irrep(Weight(0, 0, 0, 0));
    CHECK(build_slice(triv, 0).basis.size() == 1);
    CHECK(build_slice(triv, 1).basis.size() == 10);
    Irrep V = build_irrep(Weight(1, 0, 0, 0));
    CHECK(build_slice(V, 0).basis.size() == 5);
    CHECK(build_slice(V, 4).basis.size() == 2250u);
}

TEST_CASE("gvm weights") {
    Irrep V = build_irrep(Weight(2, 1, 0, 0));
    GvmBasisElement b;
    b.v = V.hw_index;
    CHECK(gvm_weight(b, V.rep.wt) == V.lambda);
    b.n = static_cast<uint16_t>(1u << slot_of(1, 2));
    CHECK(gvm_weight(b, V.rep.wt) == V.lambda + Weight(0, 1, 0, 0));
    GvmBasisElement d;
    d.v = V.hw_index;
    d.m[4] = 1;
    CHECK(gvm_weight(d, V.rep.wt) == V.lambda + Weight(0, 0, 0, 1));
}

TEST_CASE("weights agree with the realized Cartan action on slices") {
    Irrep V = build_irrep(Weight(1, 0, 0, 1));
    GvmOps ops(V);
    for (int k = 0; k <= 3; ++k) {
        Slice s = build_slice(V, k);
        for (auto& mono : s.basis) {
            GvmElement u;
            u.lambda = V.lambda;
            u.add_term(mono, Rat(1));
            Weight w = gvm_weight(mono, V.rep.wt);
            for (int i = 1; i <= 4; ++i) {
                // h_i = [x_i dx_{i+1}, x_{i+1} dx_i] via the bracket oracle
                GvmElement hi = commutator(
                    [&](const GvmElement& x) { return ops.bracket_L0(i, i + 1, x); },
                    [&](const GvmElement& x) { return ops.bracket_L0(i + 1, i, x); }, u);
                GvmElement expect = u;
                expect.scale(Rat(w[i - 1]));
                CHECK(hi == expect);
            }
        }
    }
}

TEST_CASE("pinned operator actions") {
    Irrep V = build_irrep(Weight(1, 0, 0, 0));
    GvmOps ops(V);

    // (x5 d45)_1 on del_5 v = -(d45 v)
    GvmElement del5 = unit_elt(V, {0, 0, 0, 0, 1}, 0, V.hw_index);
    GvmElement got = ops.x5d45_p1(del5);
    GvmElement expect = unit_elt(V, {0, 0, 0, 0, 0},
                                 static_cast<uint16_t>(1u << slot_of(4, 5)), V.hw_index);
    expect.scale(Rat(-1));
    CHECK(got == expect);

    // full x1 dx2 on d23 v = d13 v + d23 (E12 v)
    GvmElement d23 = unit_elt(V, {}, static_cast<uint16_t>(1u << slot_of(2, 3)), V.hw_index);
    GvmElement img = ops.raising(1, d23);
    GvmElement want = unit_elt(V, {}, static_cast<uint16_t>(1u << slot_of(1, 3)), V.hw_index);
    {
        SparseVec ev = V.rep.E(1, 2).apply(SparseVec::unit(V.hw_index));
        for (auto& [t, c] : ev.entries()) {
            GvmBasisElement b;
            b.n = static_cast<uint16_t>(1u << slot_of(2, 3));
            b.v = t;
            want.add_term(b, c);
        }
    }
    CHECK(img == want);

    // P kills anything with fewer than two d factors
    CHECK(ops.P(del5).zero());
    CHECK(ops.P(d23).zero());
    CHECK(ops.exp_minus_half_P(d23) == d23);

    // T_{5,123} (d12 v) = E53 v and T_{5,123}(d45 v) = 0
    GvmElement d12 = unit_elt(V, {}, static_cast<uint16_t>(1u << slot_of(1, 2)), V.hw_index);
    GvmElement timg = ops.T(5, 1, 2, 3, d12);
    GvmElement twant;
    twant.lambda = V.lambda;
    {
        SparseVec ev = V.rep.E(5, 3).apply(SparseVec::unit(V.hw_index));
        for (auto& [t, c] : ev.entries()) {
            GvmBasisElement b;
            b.v = t;
            twant.add_term(b, c);
        }
    }
    CHECK(timg == twant);
    GvmElement d45 = unit_elt(V, {}, static_cast<uint16_t>(1u << slot_of(4, 5)), V.hw_index);
    CHECK(ops.T(5, 1, 2, 3, d45).zero());
}

TEST_CASE("named operators change (|m|, |n|) by their declared signature") {
    Irrep V = build_irrep(Weight(0, 1, 0, 0));
    GvmOps ops(V);
    struct Sig {
        std::string name;
        int dm, dn;
    };
    const Sig sigs[] = {{"x0:1,2", 0, 0}, {"x0:4,5", 0, 0},  {"xm2:3", 1, -2},
                        {"xm2:4", 1, -2}, {"P", 1, -2},      {"x5d45_p1", -1, 1},
                        {"x5d45_m1", 0, -1}, {"x5d45_m3", 1, -3}, {"ctilde", 0, 0}};
    Slice s = build_slice(V, 5);
    for (auto& mono : s.basis) {
        GvmElement u;
        u.lambda = V.lambda;
        u.add_term(mono, Rat(1));
        for (auto& sig : sigs) {
            GvmElement img = ops.apply(sig.name, u);
            for (auto& [b, c] : img.terms) {
                CHECK(b.mtotal() == mono.mtotal() + sig.dm);
                CHECK(b.ntotal() == mono.ntotal() + sig.dn);
            }
        }
    }
    CHECK_THROWS_AS(ops.apply("bogus", unit_elt(V, {}, 0, 0)), std::invalid_argument);
}

TEST_CASE("formula operators equal the bracket oracle on graded slices") {
    for (auto& l : {Weight(0, 0, 0, 0), Weight(1, 0, 0, 0)}) {
        Irrep V = build_irrep(l);
        GvmOps ops(V);
        for (int k = 0; k <= 5; ++k) {
            for (int i = 1; i <= 4; ++i)
                compare_on_slice(
                    V, ops, k, [&](const GvmElement& x) { return ops.raising(i, x); },
                    [&](const GvmElement& x) { return ops.bracket_L0(i, i + 1, x); });
            compare_on_slice(
                V, ops, k, [&](const GvmElement& x) { return ops.x5d45(x); },
                [&](const GvmElement& x) { return ops.bracket_x5d45(x); });
        }
    }
}

TEST_CASE("commutation relations of P") {
    Irrep V = build_irrep(Weight(1, 0, 0, 0));
    GvmOps ops(V);
    OpFn P = [&](const GvmElement& x) { return ops.P(x); };
    OpFn x12 = [&](const GvmElement& x) { return ops.x0(1, 2, x); };
    OpFn x23 = [&](const GvmElement& x) { return ops.x0(2, 3, x); };
    OpFn x34 = [&](const GvmElement& x) { return ops.x0(3, 4, x); };
    OpFn x45 = [&](const GvmElement& x) { return ops.x0(4, 5, x); };
    OpFn m34 = [&](const GvmElement& x) { return ops.xm2(3, x); };
    OpFn m45 = [&](const GvmElement& x) { return ops.xm2(4, x); };

    for (int k = 0; k <= 5; ++k) {
        Slice s = build_slice(V, k);
        for (auto& mono : s.basis) {
            GvmElement u;
            u.lambda = V.lambda;
            u.add_term(mono, Rat(1));
            CHECK(commutator(m34, P, u).zero());
            CHECK(commutator(m45, P, u).zero());
            CHECK(commutator(x12, P, u).zero());
            CHECK(commutator(x23, P, u).zero());
            GvmElement c34 = commutator(x34, P, u);
            GvmElement e34 = m34(u);
            e34.scale(Rat(2));
            CHECK(c34 == e34);
            GvmElement c45 = commutator(x45, P, u);
            GvmElement e45 = m45(u);
            e45.scale(Rat(2));
            CHECK(c45 == e45);
        }
    }
}

TEST_CASE("powers of P intertwine raising parts") {
    Irrep V = build_irrep(Weight(1, 0, 0, 0));
    GvmOps ops(V);
    for (int pw = 1; pw <= 3; ++pw) {
        for (int i = 3; i <= 4; ++i) {
            OpFn Ppow = [&](const GvmElement& x) {
                GvmElement out = x;
                for (int t = 0; t < pw; ++t) out = ops.P(out);
                return out;
            };
            OpFn x0i = [&](const GvmElement& x) { return ops.x0(i, i + 1, x); };
            Slice s = build_slice(V, 6);
            for (auto& mono : s.basis) {
                GvmElement u;
                u.lambda = V.lambda;
                u.add_term(mono, Rat(1));
                GvmElement lhs = commutator(x0i, Ppow, u);
                // 2k P^{k-1} (x_i dx_{i+1})_{-2}
                GvmElement rhs = ops.xm2(i, u);
                for (int t = 0; t + 1 < pw; ++t) rhs = ops.P(rhs);
                rhs.scale(Rat(2 * pw));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("x5d45 part commutators with P") {
    Irrep V = build_irrep(Weight(0, 1, 0, 0));
    GvmOps ops(V);
    OpFn P = [&](const GvmElement& x) { return ops.P(x); };
    OpFn p1 = [&](const GvmElement& x) { return ops.x5d45_p1(x); };
    OpFn m1 = [&](const GvmElement& x) { return ops.x5d45_m1(x); };
    for (int k = 0; k <= 5; ++k) {
        Slice s = build_slice(V, k);
        for (auto& mono : s.basis) {
            GvmElement u;
            u.lambda = V.lambda;
            u.add_term(mono, Rat(1));
            // [[ (x5d45)_1, P], P] = 2 (x5d45)_{-3} + 2 z4 dy12 dy13 dy23
            GvmElement lhs =
                commutator([&](const GvmElement& x) { return commutator(p1, P, x); }, P, u);
            GvmElement rhs = ops.x5d45_m3(u);
            rhs.scale(Rat(2));
            // the extra 2 z4 dy12 dy13 dy23 term
            const int s12 = slot_of(1, 2), s13 = slot_of(1, 3), s23 = slot_of(2, 3);
            for (auto& [b, c] : u.terms) {
                uint16_t need = static_cast<uint16_t>((1u << s12) | (1u << s13) | (1u << s23));
                if ((b.n & need) != need) continue;
                GvmBasisElement t = b;
                t.n = static_cast<uint16_t>(b.n & ~need);
                t.m[3] += 1;
                rhs.add_term(t, c * Rat(2));
            }
            CHECK(lhs == rhs);
            // [(x5d45)_{-1}, P] = 3 (x5d45)_{-3}
            GvmElement lhs2 = commutator(m1, P, u);
            GvmElement rhs2 = ops.x5d45_m3(u);
            rhs2.scale(Rat(3));
            CHECK(lhs2 == rhs2);
        }
    }
}

TEST_CASE("lifted maximal leading terms are annihilated by the full raisings") {
    Irrep V = build_irrep(Weight(0, 0, 1, 2));
    GvmOps ops(V);
    // leading-term block: m = 0, n = 3, at the weight of d15 d25 d45 shifted by lambda
    Slice s3 = build_slice(V, 3);
    Weight target = V.lambda + pair_weight(slot_of(1, 5)) + pair_weight(slot_of(2, 5)) +
                    pair_weight(slot_of(4, 5));
    std::vector<int> block;
    for (int i = 0; i < static_cast<int>(s3.basis.size()); ++i)
        if (s3.basis[i].mtotal() == 0 && gvm_weight(s3.basis[i], V.rep.wt) == target)
            block.push_back(i);
    REQUIRE(!block.empty());
    // kernel of the four (x_i dx_{i+1})_0 on this block, inside the m = 0 part
    std::vector<GvmElement> basis;
    for (int idx : block) {
        GvmElement u;
        u.lambda = V.lambda;
        u.add_term(s3.basis[idx], Rat(1));
        basis.push_back(u);
    }
    // set up matrix by stacking images over a monomial index of the m=0 part
    // (done through library search elsewhere; here via direct elimination)
    std::vector<SparseVec> cols;
    std::map<GvmBasisElement, int> row_of;
    auto row_index = [&](const GvmBasisElement& b) {
        auto [it, fresh] = row_of.emplace(b, static_cast<int>(row_of.size()));
        return it->second;
    };
    std::vector<std::vector<SparseVec::Entry>> colterms(basis.size());
    for (size_t c = 0; c < basis.size(); ++c)
        for (int i = 1; i <= 4; ++i) {
            GvmElement img = ops.x0(i, i + 1, basis[c]);
            for (auto& [b, val] : img.terms)
                colterms[c].emplace_back(row_index(b) * 4 + (i - 1), val);
        }
    int nrows = static_cast<int>(row_of.size()) * 4;
    SparseMat m(nrows, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (auto& [r, v] : colterms[c]) m.add_entry(r, static_cast<int>(c), v);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    GvmElement leading;
    leading.lambda = V.lambda;
    for (auto& [c, v] : ker[0].entries()) leading.axpy(v, basis[c]);
    // P moves it into del^1 wedge^1; exp(-P/2) = 1 - P/2 here
    GvmElement lifted = ops.exp_minus_half_P(leading);
    GvmElement pl = ops.P(leading);
    CHECK(!pl.zero());
    for (auto& [b, c] : pl.terms) CHECK(b.mtotal() == 1);
    GvmElement diff = lifted;
    diff.axpy(Rat(-1), leading);
    pl.scale(rat(-1, 2));
    CHECK(diff == pl);
    // Eq 4.26: the full raisings kill the lift
    for (int i = 1; i <= 4; ++i) CHECK(ops.raising(i, lifted).zero());
}

namespace {

// Combined module action on the wedge-times-V model: (x_s dx_t)'_0 + E_st on V.
GvmElement combined_action(const Irrep& V, const GvmOps& ops, int s, int t,
                           const GvmElement& x) {
    GvmElement out = ops.xprime0(s, t, x);
    for (auto& [b, cf] : x.terms) {
        SparseVec col = V.rep.E(s, t).apply(SparseVec::unit(b.v));
        for (auto& [tt, vv] : col.entries()) {
            GvmBasisElement nb = b;
            nb.v = tt;
            out.add_term(nb, cf * vv);
        }
    }
    return out;
}

// Lexicographic subset order used by wedge_power, as bitmasks.
std::vector<uint16_t> wedge_masks(int n) {
    std::vector<uint16_t> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            uint16_t m = 0;
            for (int s : cur) m |= static_cast<uint16_t>(1u << s);
            out.push_back(m);
            return;
        }
        for (int i = start; i < 10; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("model split Casimir equals the module split Casimir") {
    Irrep V = build_irrep(Weight(1, 0, 0, 1));
    GvmOps ops(V);
    ModuleRep W = make_W();
    for (int n = 1; n <= 3; ++n) {
        ModuleRep Wn = wedge_power(W, n);
        SparseMat c = split_casimir(Wn, V.rep);
        auto masks = wedge_masks(n);
        for (int wi = 0; wi < Wn.dim; ++wi)
            for (int v = 0; v < V.rep.dim; ++v) {
                GvmElement u;
                u.lambda = V.lambda;
                GvmBasisElement b;
                b.n = masks[wi];
                b.v = v;
                u.add_term(b, Rat(1));
                GvmElement img = ops.ctilde(u);
                GvmElement expect;
                expect.lambda = V.lambda;
                SparseVec cimg = c.apply(SparseVec::unit(wi * V.rep.dim + v));
                for (auto& [idx, coeff] : cimg.entries()) {
                    GvmBasisElement eb;
                    eb.n = masks[idx / V.rep.dim];
                    eb.v = idx % V.rep.dim;
                    expect.add_term(eb, coeff);
                }
                REQUIRE(img == expect);
            }
    }
}

TEST_CASE("model action matches the tensor module (graded-piece isomorphism)") {
    // del^m wedge^n V with the (x_i dx_j)_0 action is V(m omega_4) (x) L^n W (x) V
    Irrep V = build_irrep(Weight(1, 0, 0, 0));
    GvmOps ops(V);
    ModuleRep W = make_W();
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m == 0 && n == 0) continue;
            // the del-part as a module: basis = m-exponent vectors, E_ij = -z_j dz_i
            std::vector<std::array<uint8_t, 5>> ms;
            {
                std::vector<std::array<uint8_t, 5>> tmp;
                enumerate_m_vectors(m, tmp);
                ms = tmp;
            }
            std::map<std::array<uint8_t, 5>, int> m_index;
            for (size_t i = 0; i < ms.size(); ++i) m_index[ms[i]] = static_cast<int>(i);
            ModuleRep Z;
            Z.dim = static_cast<int>(ms.size());
            for (auto& mm : ms) {
                Weight w;
                for (int i = 0; i < 4; ++i) w[i] = mm[i + 1] - mm[i];
                Z.wt.push_back(w);
            }
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j) {
                    if (i == j) continue;
                    SparseMat e(Z.dim, Z.dim);
                    for (int col = 0; col < Z.dim; ++col) {
                        if (ms[col][i - 1] == 0) continue;
                        auto t = ms[col];
                        t[i - 1] -= 1;
                        t[j - 1] += 1;
                        e.add_entry(m_index.at(t), col, Rat(-static_cast<long>(ms[col][i - 1])));
                    }
                    Z.E(i, j) = std::move(e);
                }
            REQUIRE(check_brackets(Z) == "");
            ModuleRep Wn = wedge_power(W, n);
            ModuleRep T = tensor(tensor(Z, Wn), V.rep);
            auto masks = wedge_masks(n);
            // compare matrices of every (x_i dx_j)_0 under the label bijection
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j) {
                    if (i == j) continue;
                    for (int zi = 0; zi < Z.dim; ++zi)
                        for (int wi = 0; wi < Wn.dim; ++wi)
                            for (int v = 0; v < V.rep.dim; ++v) {
                                GvmElement u;
                                u.lambda = V.lambda;
                                GvmBasisElement b;
                                b.m = ms[zi];
                                b.n = masks[wi];
                                b.v = v;
                                u.add_term(b, Rat(1));
                                GvmElement img = ops.x0(i, j, u);
                                int col = (zi * Wn.dim + wi) * V.rep.dim + v;
                                GvmElement expect;
                                expect.lambda = V.lambda;
                                SparseVec timg = T.E(i, j).apply(SparseVec::unit(col));
                                for (auto& [idx, coeff] : timg.entries()) {
                                    GvmBasisElement eb;
                                    eb.m = ms[idx / (Wn.dim * V.rep.dim)];
                                    eb.n = masks[(idx / V.rep.dim) % Wn.dim];
                                    eb.v = idx % V.rep.dim;
                                    expect.add_term(eb, coeff);
                                }
                                REQUIRE(img == expect);
                            }
                }
        }
}

TEST_CASE("covariance of the tensor operators under the combined action") {
    Irrep V = build_irrep(Weight(1, 0, 0, 1));
    GvmOps ops(V);
    struct Case {
        int s, t, i, j, k, l;
    };
    const Case cases[] = {{2, 1, 5, 1, 2, 3}, {3, 2, 5, 1, 2, 3}, {4, 3, 5, 1, 2, 3},
                          {5, 4, 5, 1, 2, 3}, {1, 2, 5, 1, 2, 3}, {2, 3, 5, 1, 2, 3},
                          {4, 5, 5, 1, 2, 3}, {1, 2, 2, 3, 4, 5}, {2, 4, 5, 1, 2, 3}};
    for (auto& c : cases) {
        for (int deg = 1; deg <= 3; ++deg) {
            Slice s = build_slice(V, deg);
            for (auto& mono : s.basis) {
                if (mono.mtotal() != 0) continue;
                GvmElement u;
                u.lambda = V.lambda;
                u.add_term(mono, Rat(1));
                GvmElement lhs = combined_action(V, ops, c.s, c.t, ops.T(c.i, c.j, c.k, c.l, u));
                lhs.axpy(Rat(-1), ops.T(c.i, c.j, c.k, c.l, combined_action(V, ops, c.s, c.t, u)));
                GvmElement rhs;
                rhs.lambda = V.lambda;
                if (c.t == c.i) rhs.axpy(Rat(1), ops.T(c.s, c.j, c.k, c.l, u));
                if (c.s == c.j) rhs.axpy(Rat(-1), ops.T(c.i, c.t, c.k, c.l, u));
                if (c.s == c.k) rhs.axpy(Rat(-1), ops.T(c.i, c.j, c.t, c.l, u));
                if (c.s == c.l) rhs.axpy(Rat(-1), ops.T(c.i, c.j, c.k, c.t, u));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Casimir recursion for the tensor operator coefficients") {
    // atomic form: [(-1)^{|ij|} dy_ij, c~] expands per the stated coefficient rule,
    // and therefore T o c~ re-expresses in the Q-form with the recursed coefficients
    Irrep V = build_irrep(Weight(0, 1, 0, 0));
    GvmOps ops(V);
    auto Dpair = [&](int a, int b, const GvmElement& x) {
        GvmElement out;
        out.lambda = x.lambda;
        int slot = slot_of(a, b);
        for (auto& [bb, cf] : x.terms) {
            if (!((bb.n >> slot) & 1)) continue;
            GvmBasisElement nb = bb;
            nb.n = static_cast<uint16_t>(bb.n & ~(1u << slot));
            int sgn = sign_before(slot, bb.n);
            if (a > b) sgn = -sgn;
            out.add_term(nb, sgn > 0 ? cf : -cf);
        }
        return out;
    };
    auto Ev = [&](int i, int j, const GvmElement& x) {
        GvmElement out;
        out.lambda = x.lambda;
        for (auto& [b, cf] : x.terms) {
            SparseVec col = V.rep.E(i, j).apply(SparseVec::unit(b.v));
            for (auto& [tt, vv] : col.entries()) {
                GvmBasisElement nb = b;
                nb.v = tt;
                out.add_term(nb, cf * vv);
            }
        }
        return out;
    };
    auto hstar = [&](int k, const GvmElement& x) {
        GvmElement out;
        out.lambda = x.lambda;
        for (auto& [b, cf] : x.terms) out.add_term(b, cf * dual_cartan_eval(k, V.rep.wt[b.v]));
        return out;
    };
    for (int deg = 1; deg <= 2; ++deg) {
        Slice s = build_slice(V, deg);
        for (auto& mono : s.basis) {
            if (mono.mtotal() != 0) continue;
            GvmElement u;
            u.lambda = V.lambda;
            u.add_term(mono, Rat(1));
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) {
                    GvmElement lhs = Dpair(i, j, ops.ctilde(u));
                    lhs.axpy(Rat(-1), ops.ctilde(Dpair(i, j, u)));
                    GvmElement rhs;
                    rhs.lambda = V.lambda;
                    for (int k = 1; k <= 5; ++k) {
                        if (k == i || k == j) continue;
                        rhs.axpy(Rat(1), Dpair(i, k, Ev(k, j, u)));
                        rhs.axpy(Rat(-1), Dpair(j, k, Ev(k, i, u)));
                    }
                    auto sk = t_of_n(static_cast<uint16_t>(1u << slot_of(i, j)));
                    GvmElement dx = Dpair(i, j, u);
                    for (int k = 1; k <= 4; ++k)
                        if (sk[k - 1] != 0) {
                            GvmElement h = hstar(k, dx);
                            h.scale(Rat(sk[k - 1]));
                            rhs.axpy(Rat(1), h);
                        }
                    rhs.scale(rat(1, 10));
                    REQUIRE(lhs == rhs);
                }
        }
    }
}
