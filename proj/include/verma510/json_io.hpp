#pragma once

#include <json.hpp>

#include "singular.hpp"
#include "tensor.hpp"

namespace verma510 {

using json = nlohmann::ordered_json;

inline json to_json(const Weight& w) { return json::array({w[0], w[1], w[2], w[3]}); }

inline Weight weight_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("weight: expected an array of 4 integers");
    return Weight(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>());
}

inline json to_json(const SparseVec& v) {
    json out = json::array();
    for (auto& [i, c] : v.entries()) out.push_back(json::array({i, rat_to_string(c)}));
    return out;
}

inline json to_json(const GvmElement& e) {
    json terms = json::array();
    for (auto& [b, c] : e.terms) {
        json m = json::array();
        for (int i = 0; i < 5; ++i) m.push_back(static_cast<int>(b.m[i]));
        json n = json::array();
        for (int s = 0; s < 10; ++s) n.push_back(static_cast<int>((b.n >> s) & 1));
        terms.push_back({{"m", m}, {"n", n}, {"v", b.v}, {"c", rat_to_string(c)}});
    }
    return json{{"lambda", to_json(e.lambda)}, {"terms", terms}};
}

inline GvmElement gvm_element_from_json(const json& j) {
    GvmElement e;
    e.lambda = weight_from_json(j.at("lambda"));
    for (auto& t : j.at("terms")) {
        GvmBasisElement b;
        const json& m = t.at("m");
        if (!m.is_array() || m.size() != 5)
            throw std::invalid_argument("gvm element: 'm' must have 5 entries");
        for (int i = 0; i < 5; ++i) {
            int v = m[i].get<int>();
            if (v < 0 || v > 31) throw std::invalid_argument("gvm element: bad exponent");
            b.m[i] = static_cast<uint8_t>(v);
        }
        const json& n = t.at("n");
        if (!n.is_array() || n.size() != 10)
            throw std::invalid_argument("gvm element: 'n' must have 10 bits");
        for (int s = 0; s < 10; ++s) {
            int bit = n[s].get<int>();
            if (bit != 0 && bit != 1) throw std::invalid_argument("gvm element: bad bit");
            if (bit) b.n |= static_cast<uint16_t>(1u << s);
        }
        b.v = t.at("v").get<int>();
        if (b.v < 0) throw std::invalid_argument("gvm element: bad basis index");
        e.add_term(b, rat_from_string(t.at("c").get<std::string>()));
    }
    return e;
}

inline json to_json(const DecompositionReport& rep) {
    json comps = json::array();
    for (auto& c : rep.components) {
        comps.push_back({{"highest_weight", to_json(c.hw)},
                         {"multiplicity", c.multiplicity},
                         {"dim", weyl_dim(c.hw)},
                         {"maximal_vectors", [&] {
                              json v = json::array();
                              for (auto& m : c.maximal) v.push_back(to_json(m));
                              return v;
                          }()}});
    }
    return json{{"dim", rep.dim}, {"components", comps}};
}

inline json to_json(const SingularReport& rep) {
    json groups = json::array();
    for (auto& g : rep.kernel) {
        json basis = json::array();
        for (auto& e : g.basis) basis.push_back(to_json(e));
        groups.push_back({{"weight", to_json(g.wt)}, {"basis", basis}});
    }
    json matches = json::array();
    for (bool b : rep.construction_matches) matches.push_back(b);
    return json{{"lambda", to_json(rep.lambda)},
                {"degree", rep.degree},
                {"kernel", groups},
                {"construction_matches", matches}};
}

inline json to_json(const KrReport& rep) {
    json entries = json::array();
    for (auto& e : rep.entries) {
        json counts = json::array();
        for (int c : e.singular_counts) counts.push_back(c);
        entries.push_back({{"lambda", to_json(e.lambda)},
                           {"dim", e.dim},
                           {"skipped_cap", e.skipped_cap},
                           {"singular_counts", counts},
                           {"degenerate", e.degenerate},
                           {"conjectured", e.conjectured},
                           {"trivial", e.trivial}});
    }
    return json{{"bound", rep.bound},
                {"max_degree", rep.max_degree},
                {"consistent", rep.consistent},
                {"entries", entries}};
}

}  // namespace verma510
