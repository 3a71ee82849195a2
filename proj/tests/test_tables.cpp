#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "verma510/fixtures.hpp"
#include "verma510/irrep.hpp"

using namespace verma510;

namespace {

// Every fixture row must be internally consistent (wt = mu - sum k_i alpha_i)
// and the multiset of (weight, multiplicity) must match the recomputed module.
void check_table(const Weight& mu, const std::vector<fixtures::WeightRow>& rows,
                 bool with_mult = true) {
    Irrep V = build_irrep(mu);
    auto ch = V.rep.character();
    std::set<Weight> seen;
    long total = 0;
    for (auto& r : rows) {
        CHECK(r.wt == mu - weight_from_root_coords(r.k));
        CHECK(seen.insert(r.wt).second);
        if (with_mult) {
            CHECK(ch.at(r.wt) == r.mult);
            total += r.mult;
        }
    }
    CHECK(seen.size() == ch.size());
    if (with_mult) CHECK(total == V.rep.dim);
}

}  // namespace

TEST_CASE("weight table of V(omega_2)") { check_table(Weight(0, 1, 0, 0), fixtures::table1()); }

TEST_CASE("weight table of V(omega_1 + omega_3)") {
    check_table(Weight(1, 0, 1, 0), fixtures::table5());
    // triple rows
    for (int r : {8, 11, 16, 21, 26}) CHECK(fixtures::table5()[r - 1].mult == 3);
}

TEST_CASE("weight table of V(2 omega_1 + omega_4)") {
    check_table(Weight(2, 0, 0, 1), fixtures::table67());
    for (int r : {18, 21, 26, 32, 41}) CHECK(fixtures::table67()[r - 1].mult == 4);
}

TEST_CASE("weight list of V(omega_1 + omega_2)") {
    check_table(Weight(1, 1, 0, 0), fixtures::table9(), /*with_mult=*/false);
    // 30 distinct weights carrying all 40 dimensions
    Irrep V = build_irrep(Weight(1, 1, 0, 0));
    CHECK(fixtures::table9().size() == V.rep.character().size());
    CHECK(V.rep.dim == 40);
}

TEST_CASE("V(3 omega_1) has 35 simple weights") {
    Irrep V = build_irrep(Weight(3, 0, 0, 0));
    CHECK(V.rep.dim == 35);
    CHECK(V.rep.character().size() == 35);
    for (auto& [w, m] : V.rep.character()) CHECK(m == 1);
}
