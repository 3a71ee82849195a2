#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "rational.hpp"

namespace verma510 {

// Weight of sl5 in the fundamental-weight basis omega_1..omega_4.
struct Weight {
    std::array<int, 4> c{0, 0, 0, 0};

    Weight() = default;
    Weight(int a, int b, int d, int e) : c{a, b, d, e} {}

    int operator[](int i) const { return c[i]; }
    int& operator[](int i) { return c[i]; }

    bool dominant() const { return c[0] >= 0 && c[1] >= 0 && c[2] >= 0 && c[3] >= 0; }
    int sum() const { return c[0] + c[1] + c[2] + c[3]; }

    Weight operator+(const Weight& o) const {
        return Weight(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]);
    }
    Weight operator-(const Weight& o) const {
        return Weight(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]);
    }
    Weight operator-() const { return Weight(-c[0], -c[1], -c[2], -c[3]); }
    Weight reversed() const { return Weight(c[3], c[2], c[1], c[0]); }

    auto operator<=>(const Weight&) const = default;

    std::string str() const {
        return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
               std::to_string(c[2]) + "," + std::to_string(c[3]) + ")";
    }
};

// Exponents k_1..k_4 in sigma = mu - sum k_i alpha_i.
struct RootCoords {
    std::array<int, 4> k{0, 0, 0, 0};

    RootCoords() = default;
    RootCoords(int a, int b, int c, int d) : k{a, b, c, d} {}

    int operator[](int i) const { return k[i]; }
    int& operator[](int i) { return k[i]; }
    int height() const { return k[0] + k[1] + k[2] + k[3]; }

    auto operator<=>(const RootCoords&) const = default;
};

inline const std::array<Weight, 4>& simple_roots() {
    static const std::array<Weight, 4> a = {Weight(2, -1, 0, 0), Weight(-1, 2, -1, 0),
                                            Weight(0, -1, 2, -1), Weight(0, 0, -1, 2)};
    return a;
}

inline Weight delta_weight() { return Weight(1, 1, 1, 1); }

// Weight of the standard basis vector e_a of C^5 (a in 1..5).
inline Weight eps_weight(int a) {
    switch (a) {
        case 1: return Weight(1, 0, 0, 0);
        case 2: return Weight(-1, 1, 0, 0);
        case 3: return Weight(0, -1, 1, 0);
        case 4: return Weight(0, 0, -1, 1);
        case 5: return Weight(0, 0, 0, -1);
    }
    throw std::out_of_range("eps_weight: index must be 1..5");
}

inline Weight weight_from_root_coords(const RootCoords& k) {
    Weight w;
    for (int i = 0; i < 4; ++i) {
        const Weight& a = simple_roots()[i];
        for (int j = 0; j < 4; ++j) w[j] += k[i] * a[j];
    }
    return w;
}

// Inverse of the alpha-coordinate map; nullopt when w is not in the root lattice.
inline std::optional<RootCoords> root_coords_from_weight(const Weight& w) {
    // 5 * A^{-1} for the sl5 Cartan matrix
    static const int inv5[4][4] = {{4, 3, 2, 1}, {3, 6, 4, 2}, {2, 4, 6, 3}, {1, 2, 3, 4}};
    RootCoords k;
    for (int i = 0; i < 4; ++i) {
        long s = 0;
        for (int j = 0; j < 4; ++j) s += static_cast<long>(inv5[i][j]) * w[j];
        if (s % 5 != 0) return std::nullopt;
        k[i] = static_cast<int>(s / 5);
    }
    return k;
}

using RatWeight = std::array<Rat, 4>;

inline RatWeight rat_weight(const Weight& w) {
    return {Rat(w[0]), Rat(w[1]), Rat(w[2]), Rat(w[3])};
}

// Killing-form inner product on the weight space, in the normalization with
// (alpha_i, alpha_i) = 1/5 and (alpha_i, alpha_j) = -1/10 for |i-j| = 1.
// Gram matrix in the omega basis: (1/50) * [[4,3,2,1],[3,6,4,2],[2,4,6,3],[1,2,3,4]].
inline Rat killing_form(const RatWeight& u, const RatWeight& v) {
    static const int gram50[4][4] = {{4, 3, 2, 1}, {3, 6, 4, 2}, {2, 4, 6, 3}, {1, 2, 3, 4}};
    Rat s(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s += u[i] * v[j] * gram50[i][j];
    return s / 50;
}

inline Rat killing_form(const Weight& u, const Weight& v) {
    return killing_form(rat_weight(u), rat_weight(v));
}

// Coefficients of h_i^* in the h basis (i in 1..4).
inline std::array<Rat, 4> dual_cartan_coeffs(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("dual_cartan_coeffs: index must be 1..4");
    static const int num[4][4] = {{4, 3, 2, 1}, {3, 6, 4, 2}, {2, 4, 6, 3}, {1, 2, 3, 4}};
    std::array<Rat, 4> out;
    for (int j = 0; j < 4; ++j) out[j] = rat(num[i - 1][j], 5);
    return out;
}

// Value of h_i^* on a vector of weight nu (the dual-Cartan pairing).
inline Rat dual_cartan_eval(int i, const Weight& nu) {
    auto cs = dual_cartan_coeffs(i);
    Rat s(0);
    for (int j = 0; j < 4; ++j) s += cs[j] * nu[j];
    return s;
}

// Weyl dimension of V(lambda), evaluated exactly.
inline long weyl_dim(const Weight& lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("weyl_dim: weight " + lambda.str() + " is not dominant");
    Rat d(1);
    for (int i = 0; i < 4; ++i) {
        long run = 0;
        for (int j = i; j < 4; ++j) {
            run += lambda[j] + 1;
            d *= rat(run, j - i + 1);
        }
    }
    if (d.get_den() != 1)
        throw std::logic_error("weyl_dim: non-integral result");
    return static_cast<long>(d.get_num().get_si());
}

// (lambda, lambda + 2 delta): the scalar by which the Casimir element acts
// on V(lambda) in the 1/10-normalized form.
inline Rat casimir_scalar(const Weight& lambda) {
    Weight l2 = lambda + delta_weight() + delta_weight();
    return killing_form(lambda, l2);
}

}  // namespace verma510
