#pragma once

// Embedded weight-table and decomposition fixtures. All fixture content is
// recomputed by the library and diffed; the data here is never used as a
// computation shortcut.

#include <cstdint>
#include <vector>

#include "root_data.hpp"

namespace verma510::fixtures {

struct WeightRow {
    int row;        // printed row index (1-based)
    Weight wt;      // coordinates in the omega basis
    RootCoords k;   // exponents of mu - sum k_i alpha_i
    int mult;
};

// V(omega_2): 10 weights, all simple; basis d12..d45 in product order.
inline const std::vector<WeightRow>& table1() {
    static const std::vector<WeightRow> t = {
        {1, {0, 1, 0, 0}, {0, 0, 0, 0}, 1},  {2, {1, -1, 1, 0}, {0, 1, 0, 0}, 1},
        {3, {-1, 0, 1, 0}, {1, 1, 0, 0}, 1}, {4, {1, 0, -1, 1}, {0, 1, 1, 0}, 1},
        {5, {-1, 1, -1, 1}, {1, 1, 1, 0}, 1}, {6, {0, -1, 0, 1}, {1, 2, 1, 0}, 1},
        {7, {1, 0, 0, -1}, {0, 1, 1, 1}, 1}, {8, {-1, 1, 0, -1}, {1, 1, 1, 1}, 1},
        {9, {0, -1, 1, -1}, {1, 2, 1, 1}, 1}, {10, {0, 0, -1, 0}, {1, 2, 2, 1}, 1},
    };
    return t;
}

struct WedgeRow {
    int n;
    std::vector<Weight> components;
    std::vector<std::vector<int>> maximal_slots;  // slot sets of the maximal vectors
};

// Decomposition of Lambda^n W. The first maximal vector of the n = 7 row is
// printed with six factors in the source table; the d12 factor forced by the
// (1,0,0,2) weight is restored here.
inline const std::vector<WedgeRow>& table2() {
    static const std::vector<WedgeRow> t = {
        {1, {{0, 1, 0, 0}}, {{0}}},
        {2, {{1, 0, 1, 0}}, {{0, 1}}},
        {3, {{0, 0, 2, 0}, {2, 0, 0, 1}}, {{0, 1, 2}, {0, 1, 3}}},
        {4, {{3, 0, 0, 0}, {1, 0, 1, 1}}, {{0, 1, 3, 6}, {0, 1, 2, 3}}},
        {5, {{2, 0, 1, 0}, {0, 1, 0, 2}}, {{0, 1, 2, 3, 6}, {0, 1, 2, 3, 4}}},
        {6, {{0, 0, 0, 3}, {1, 1, 0, 1}}, {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 6}}},
        {7, {{1, 0, 0, 2}, {0, 2, 0, 0}}, {{0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 6, 7}}},
        {8, {{0, 1, 0, 1}}, {{0, 1, 2, 3, 4, 5, 6, 7}}},
        {9, {{0, 0, 1, 0}}, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}},
        {10, {{0, 0, 0, 0}}, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}},
    };
    return t;
}

struct PieriRow {
    Weight mu;
    // components as (first three coordinates, offset c); the fourth
    // coordinate is k + c, and entries with k + c < 0 are absent
    std::vector<std::array<int, 4>> comps;
};

// Decomposition of V(k omega_4) (x) V(mu).
inline const std::vector<PieriRow>& table3() {
    static const std::vector<PieriRow> t = {
        {{0, 1, 0, 0}, {{0, 1, 0, 0}, {1, 0, 0, -1}}},
        {{1, 0, 1, 0}, {{1, 0, 1, 0}, {0, 0, 1, -1}, {1, 1, 0, -1}, {0, 1, 0, -2}}},
        {{0, 0, 2, 0}, {{0, 0, 2, 0}, {0, 1, 1, -1}, {0, 2, 0, -2}}},
        {{2, 0, 0, 1},
         {{2, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, -1}, {2, 0, 1, -1}, {1, 0, 1, -2}, {0, 0, 1, -3}}},
        {{1, 0, 1, 1},
         {{1, 0, 1, 1},
          {0, 0, 1, 0},
          {1, 1, 0, 0},
          {0, 1, 0, -1},
          {1, 0, 2, -1},
          {0, 0, 2, -2},
          {1, 1, 1, -2},
          {0, 1, 1, -3}}},
        {{3, 0, 0, 0}, {{3, 0, 0, 0}, {2, 0, 0, -1}, {1, 0, 0, -2}, {0, 0, 0, -3}}},
        {{0, 1, 0, 2},
         {{0, 1, 0, 2}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, -1}, {0, 1, 2, -2}, {1, 0, 2, -3}}},
        {{2, 0, 1, 0},
         {{2, 0, 1, 0}, {1, 0, 1, -1}, {0, 0, 1, -2}, {2, 1, 0, -1}, {1, 1, 0, -2}, {0, 1, 0, -3}}},
        {{0, 0, 0, 3}, {{0, 0, 0, 3}, {0, 0, 1, 1}, {0, 0, 2, -1}, {0, 0, 3, -3}}},
        {{1, 1, 0, 1},
         {{1, 1, 0, 1},
          {0, 1, 0, 0},
          {2, 0, 0, 0},
          {1, 0, 0, -1},
          {1, 1, 1, -1},
          {0, 1, 1, -2},
          {2, 0, 1, -2},
          {1, 0, 1, -3}}},
        {{1, 0, 0, 2},
         {{1, 0, 0, 2}, {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 0, 1, -1}, {1, 0, 2, -2}, {0, 0, 2, -3}}},
        {{0, 2, 0, 0}, {{0, 2, 0, 0}, {1, 1, 0, -1}, {2, 0, 0, -2}}},
        {{0, 1, 0, 1}, {{0, 1, 0, 1}, {1, 0, 0, 0}, {0, 1, 1, -1}, {1, 0, 1, -2}}},
        {{0, 0, 1, 0}, {{0, 0, 1, 0}, {0, 1, 0, -1}}},
    };
    return t;
}

// V(omega_1 + omega_3): 35 weights, triples at rows 8, 11, 16, 21, 26.
inline const std::vector<WeightRow>& table5() {
    static const std::vector<WeightRow> t = {
        {1, {1, 0, 1, 0}, {0, 0, 0, 0}, 1},   {2, {-1, 1, 1, 0}, {1, 0, 0, 0}, 1},
        {3, {1, 1, -1, 1}, {0, 0, 1, 0}, 1},  {4, {-1, 2, -1, 1}, {1, 0, 1, 0}, 1},
        {5, {1, 1, 0, -1}, {0, 0, 1, 1}, 1},  {6, {0, -1, 2, 0}, {1, 1, 0, 0}, 1},
        {7, {2, -1, 0, 1}, {0, 1, 1, 0}, 1},  {8, {0, 0, 0, 1}, {1, 1, 1, 0}, 3},
        {9, {-1, 2, 0, -1}, {1, 0, 1, 1}, 1}, {10, {2, -1, 1, -1}, {0, 1, 1, 1}, 1},
        {11, {0, 0, 1, -1}, {1, 1, 1, 1}, 3}, {12, {1, -2, 1, 1}, {1, 2, 1, 0}, 1},
        {13, {-2, 1, 0, 1}, {2, 1, 1, 0}, 1}, {14, {0, 1, -2, 2}, {1, 1, 2, 0}, 1},
        {15, {2, 0, -1, 0}, {0, 1, 2, 1}, 1}, {16, {0, 1, -1, 0}, {1, 1, 2, 1}, 3},
        {17, {1, -2, 2, -1}, {1, 2, 1, 1}, 1}, {18, {-1, -1, 1, 1}, {2, 2, 1, 0}, 1},
        {19, {-2, 1, 1, -1}, {2, 1, 1, 1}, 1}, {20, {1, -1, -1, 2}, {1, 2, 2, 0}, 1},
        {21, {1, -1, 0, 0}, {1, 2, 2, 1}, 3}, {22, {-1, -1, 2, -1}, {2, 2, 1, 1}, 1},
        {23, {-1, 0, -1, 2}, {2, 2, 2, 0}, 1}, {24, {-2, 2, -1, 0}, {2, 1, 2, 1}, 1},
        {25, {0, 1, 0, -2}, {1, 1, 2, 2}, 1}, {26, {-1, 0, 0, 0}, {2, 2, 2, 1}, 3},
        {27, {1, 0, -2, 1}, {1, 2, 3, 1}, 1}, {28, {1, -1, 1, -2}, {1, 2, 2, 2}, 1},
        {29, {-1, 1, -2, 1}, {2, 2, 3, 1}, 1}, {30, {0, -2, 1, 0}, {2, 3, 2, 1}, 1},
        {31, {1, 0, -1, -1}, {1, 2, 3, 2}, 1}, {32, {-1, 0, 1, -2}, {2, 2, 2, 2}, 1},
        {33, {0, -1, -1, 1}, {2, 3, 3, 1}, 1}, {34, {-1, 1, -1, -1}, {2, 2, 3, 2}, 1},
        {35, {0, -1, 0, -1}, {2, 3, 3, 2}, 1},
    };
    return t;
}

// V(2 omega_1 + omega_4): 55 weights, multiplicity 4 at rows 18, 21, 26, 32, 41.
inline const std::vector<WeightRow>& table67() {
    static const std::vector<WeightRow> t = {
        {1, {2, 0, 0, 1}, {0, 0, 0, 0}, 1},    {2, {0, 1, 0, 1}, {1, 0, 0, 0}, 1},
        {3, {2, 0, 1, -1}, {0, 0, 0, 1}, 1},   {4, {-2, 2, 0, 1}, {2, 0, 0, 0}, 1},
        {5, {1, -1, 1, 1}, {1, 1, 0, 0}, 1},   {6, {0, 1, 1, -1}, {1, 0, 0, 1}, 1},
        {7, {2, 1, -1, 0}, {0, 0, 1, 1}, 1},   {8, {-1, 0, 1, 1}, {2, 1, 0, 0}, 1},
        {9, {-2, 2, 1, -1}, {2, 0, 0, 1}, 1},  {10, {1, 0, -1, 2}, {1, 1, 1, 0}, 1},
        {11, {1, -1, 2, -1}, {1, 1, 0, 1}, 1}, {12, {0, 2, -1, 0}, {1, 0, 1, 1}, 1},
        {13, {3, -1, 0, 0}, {0, 1, 1, 1}, 1},  {14, {0, -2, 2, 1}, {2, 2, 0, 0}, 1},
        {15, {-1, 1, -1, 2}, {2, 1, 1, 0}, 1}, {16, {-1, 0, 2, -1}, {2, 1, 0, 1}, 1},
        {17, {-2, 3, -1, 0}, {2, 0, 1, 1}, 1}, {18, {1, 0, 0, 0}, {1, 1, 1, 1}, 4},
        {19, {0, -1, 0, 2}, {2, 2, 1, 0}, 1},  {20, {0, -2, 3, -1}, {2, 2, 0, 1}, 1},
        {21, {-1, 1, 0, 0}, {2, 1, 1, 1}, 4},  {22, {2, -2, 1, 0}, {1, 2, 1, 1}, 1},
        {23, {1, 1, -2, 1}, {1, 1, 2, 1}, 1},  {24, {1, 0, 1, -2}, {1, 1, 1, 2}, 1},
        {25, {0, 0, -2, 3}, {2, 2, 2, 0}, 1},  {26, {0, -1, 1, 0}, {2, 2, 1, 1}, 4},
        {27, {-1, 2, -2, 1}, {2, 1, 2, 1}, 1}, {28, {-1, 1, 1, -2}, {2, 1, 1, 2}, 1},
        {29, {2, -1, -1, 1}, {1, 2, 2, 1}, 1}, {30, {1, 1, -1, -1}, {1, 1, 2, 2}, 1},
        {31, {-3, 2, 0, 0}, {3, 1, 1, 1}, 1},  {32, {0, 0, -1, 1}, {2, 2, 2, 1}, 4},
        {33, {-2, 0, 1, 0}, {3, 2, 1, 1}, 1},  {34, {0, -1, 2, -2}, {2, 2, 1, 2}, 1},
        {35, {-1, 2, -1, -1}, {2, 1, 2, 2}, 1}, {36, {2, -1, 0, -1}, {1, 2, 2, 2}, 1},
        {37, {1, -3, 2, 0}, {2, 3, 1, 1}, 1},  {38, {-1, -2, 2, 0}, {3, 3, 1, 1}, 1},
        {39, {-2, 1, -1, 1}, {3, 2, 2, 1}, 1}, {40, {1, -2, 0, 1}, {2, 3, 2, 1}, 1},
        {41, {0, 0, 0, -1}, {2, 2, 2, 2}, 4},  {42, {0, 1, -3, 2}, {2, 2, 3, 1}, 1},
        {43, {0, 0, 1, -3}, {2, 2, 2, 3}, 1},  {44, {-1, -1, 0, 1}, {3, 3, 2, 1}, 1},
        {45, {-2, 1, 0, -1}, {3, 2, 2, 2}, 1}, {46, {1, -2, 1, -1}, {2, 3, 2, 2}, 1},
        {47, {0, 1, -2, 0}, {2, 2, 3, 2}, 1},  {48, {1, -1, -2, 2}, {2, 3, 3, 1}, 1},
        {49, {-1, -1, 1, -1}, {3, 3, 2, 2}, 1}, {50, {1, -1, -1, 0}, {2, 3, 3, 2}, 1},
        {51, {-1, 0, -2, 2}, {3, 3, 3, 1}, 1}, {52, {0, 1, -1, -2}, {2, 2, 3, 3}, 1},
        {53, {-1, 0, -1, 0}, {3, 3, 3, 2}, 1}, {54, {1, -1, 0, -2}, {2, 3, 3, 3}, 1},
        {55, {-1, 0, 0, -2}, {3, 3, 3, 3}, 1},
    };
    return t;
}

// V(omega_1 + omega_2): the 30 distinct weights (multiplicities recomputed).
inline const std::vector<WeightRow>& table9() {
    static const std::vector<WeightRow> t = {
        {1, {1, 1, 0, 0}, {0, 0, 0, 0}, 0},   {2, {-1, 2, 0, 0}, {1, 0, 0, 0}, 0},
        {3, {2, -1, 1, 0}, {0, 1, 0, 0}, 0},  {4, {0, 0, 1, 0}, {1, 1, 0, 0}, 0},
        {5, {2, 0, -1, 1}, {0, 1, 1, 0}, 0},  {6, {-2, 1, 1, 0}, {2, 1, 0, 0}, 0},
        {7, {1, -2, 2, 0}, {1, 2, 0, 0}, 0},  {8, {0, 1, -1, 1}, {1, 1, 1, 0}, 0},
        {9, {2, 0, 0, -1}, {0, 1, 1, 1}, 0},  {10, {-1, -1, 2, 0}, {2, 2, 0, 0}, 0},
        {11, {-2, 2, -1, 1}, {2, 1, 1, 0}, 0}, {12, {1, -1, 0, 1}, {1, 2, 1, 0}, 0},
        {13, {0, 1, 0, -1}, {1, 1, 1, 1}, 0}, {14, {-1, 0, 0, 1}, {2, 2, 1, 0}, 0},
        {15, {-2, 2, 0, -1}, {2, 1, 1, 1}, 0}, {16, {1, 0, -2, 2}, {1, 2, 2, 0}, 0},
        {17, {1, -1, 1, -1}, {1, 2, 1, 1}, 0}, {18, {0, -2, 1, 1}, {2, 3, 1, 0}, 0},
        {19, {-1, 1, -2, 2}, {2, 2, 2, 0}, 0}, {20, {-1, 0, 1, -1}, {2, 2, 1, 1}, 0},
        {21, {1, 0, -1, 0}, {1, 2, 2, 1}, 0}, {22, {0, -1, -1, 2}, {2, 3, 2, 0}, 0},
        {23, {0, -2, 2, -1}, {2, 3, 1, 1}, 0}, {24, {-1, 1, -1, 0}, {2, 2, 2, 1}, 0},
        {25, {1, 0, 0, -2}, {1, 2, 2, 2}, 0}, {26, {0, -1, 0, 0}, {2, 3, 2, 1}, 0},
        {27, {-1, 1, 0, -2}, {2, 2, 2, 2}, 0}, {28, {0, 0, -2, 1}, {2, 3, 3, 1}, 0},
        {29, {0, -1, 1, -2}, {2, 3, 2, 2}, 0}, {30, {0, 0, -1, -1}, {2, 3, 3, 2}, 0},
    };
    return t;
}

}  // namespace verma510::fixtures
