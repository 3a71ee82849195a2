#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "root_data.hpp"

namespace verma510 {

// Odd index pairs. Canonical product order of the d-factors:
//   d12 d13 d23 d14 d24 d34 d15 d25 d35 d45   (slots 0..9)
// All sign rules count occupied slots relative to this order: |ij| counts
// occupied slots strictly before slot(ij), |ij,kl| counts occupied slots
// strictly between the two. The bracket-derived action is the arbiter for
// this convention; see the operator identity tests.
inline constexpr int kSlotPairs[10][2] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4},
                                          {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};

inline int slot_of(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int s = 0; s < 10; ++s)
        if (kSlotPairs[s][0] == i && kSlotPairs[s][1] == j) return s;
    throw std::out_of_range("slot_of: bad index pair");
}

inline Weight pair_weight(int slot) {
    return eps_weight(kSlotPairs[slot][0]) + eps_weight(kSlotPairs[slot][1]);
}

inline int sign_before(int slot, uint16_t n) {
    uint16_t mask = static_cast<uint16_t>((1u << slot) - 1u);
    return (std::popcount(static_cast<unsigned>(n & mask)) & 1) ? -1 : 1;
}

inline int sign_between(int slot_a, int slot_b, uint16_t n) {
    if (slot_a > slot_b) std::swap(slot_a, slot_b);
    uint16_t mask = static_cast<uint16_t>(((1u << slot_b) - 1u) & ~((1u << (slot_a + 1)) - 1u));
    return (std::popcount(static_cast<unsigned>(n & mask)) & 1) ? -1 : 1;
}

// Sign of the permutation (i j k l m) of 1..5; 0 if any index repeats.
inline int epsilon(int i, int j, int k, int l, int m) {
    int p[5] = {i, j, k, l, m};
    for (int a = 0; a < 5; ++a)
        if (p[a] < 1 || p[a] > 5) return 0;
    int inv = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            if (p[a] == p[b]) return 0;
            if (p[a] > p[b]) ++inv;
        }
    return (inv & 1) ? -1 : 1;
}

// [f d_jk ; g d_lm] = eps_{ijklm} f g  d/dx_i for x-monomials f, g.
struct OddBracketResult {
    bool nonzero = false;
    int sign = 0;
    std::array<int, 5> fg{};  // exponents of the product monomial
    int deriv = 0;            // i of the resulting d/dx_i
};

inline OddBracketResult odd_bracket(const std::array<int, 5>& f, int j, int k,
                                    const std::array<int, 5>& g, int l, int m) {
    OddBracketResult r;
    for (int i = 1; i <= 5; ++i) {
        int s = epsilon(i, j, k, l, m);
        if (s == 0) continue;
        r.nonzero = true;
        r.sign = s;
        r.deriv = i;
        for (int t = 0; t < 5; ++t) r.fg[t] = f[t] + g[t];
        return r;
    }
    return r;
}

}  // namespace verma510
