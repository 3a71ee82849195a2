// Command-line driver: weight tables, tensor/wedge decompositions, singular
// vector search and verification, and the classification scan.
//
// Exit codes: 0 = results consistent, 1 = discrepancy found, 2 = usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "verma510/fixtures.hpp"
#include "verma510/json_io.hpp"
#include "verma510/singular.hpp"

using namespace verma510;

namespace {

struct RunConfig {
    std::string lambda_str;
    std::string mu_str;
    int wedge_n = 0;
    int degree = 1;
    int bound = 2;
    int max_degree = 4;
    long cap = kDefaultDimCap;
    int threads = 1;
    bool as_json = false;
    bool check_tables = false;
    std::string in_path;
    std::string out_path;
    std::string family;
};

Weight parse_weight(const std::string& s) {
    Weight w;
    int pos = 0;
    size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        size_t comma = s.find(',', start);
        std::string tok =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        if (tok.empty())
            throw CLI::ValidationError("weight", "expected four comma-separated integers");
        w[pos++] = std::stoi(tok);
        if (comma == std::string::npos && i < 3)
            throw CLI::ValidationError("weight", "expected four comma-separated integers");
        start = comma + 1;
    }
    return w;
}

long effective_cap(long flag_cap) {
    if (flag_cap != kDefaultDimCap) return flag_cap;
    if (const char* env = std::getenv("VERMA510_CAP")) {
        long v = std::atol(env);
        if (v >= 1) return v;
    }
    return flag_cap;
}

void emit(const json& j, const RunConfig& cfg) {
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        out << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

int cmd_dim(const RunConfig& cfg) {
    Weight l = parse_weight(cfg.lambda_str);
    std::cout << weyl_dim(l) << "\n";
    return 0;
}

int cmd_tables(const RunConfig& cfg) {
    Weight l = parse_weight(cfg.lambda_str);
    Irrep V = build_irrep(l, effective_cap(cfg.cap));

    struct Row {
        RootCoords k;
        Weight wt;
        int mult;
        std::vector<VermaLabel> labels;
    };
    std::map<RootCoords, Row> rows;
    for (auto& [w, m] : V.rep.character()) {
        auto k = root_coords_from_weight(l - w);
        if (!k) throw std::logic_error("tables: weight outside the root lattice");
        rows[*k] = {*k, w, static_cast<int>(m), verma_basis_labels(l, *k)};
    }
    std::vector<Row> ordered;
    for (auto& [k, r] : rows) ordered.push_back(r);
    std::sort(ordered.begin(), ordered.end(), [](const Row& a, const Row& b) {
        if (a.k.height() != b.k.height()) return a.k.height() < b.k.height();
        return a.k < b.k;
    });

    if (cfg.as_json || !cfg.out_path.empty()) {
        json out = json::array();
        int idx = 1;
        for (auto& r : ordered) {
            json labels = json::array();
            for (auto& lab : r.labels) {
                json a = json::array();
                for (int x : lab.a) a.push_back(x);
                labels.push_back(a);
            }
            out.push_back({{"row", idx++},
                           {"weight", to_json(r.wt)},
                           {"k", json::array({r.k[0], r.k[1], r.k[2], r.k[3]})},
                           {"multiplicity", r.mult},
                           {"verma_labels", labels}});
        }
        emit(json{{"lambda", to_json(l)}, {"dim", V.rep.dim}, {"rows", out}}, cfg);
        return 0;
    }
    std::cout << "V" << l.str() << "  dim " << V.rep.dim << "\n";
    std::cout << "row   weight            k             mult  verma labels\n";
    int idx = 1;
    for (auto& r : ordered) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%-5d %-17s (%d,%d,%d,%d)     %-5d", idx++,
                      r.wt.str().c_str(), r.k[0], r.k[1], r.k[2], r.k[3], r.mult);
        std::cout << buf;
        for (size_t i = 0; i < r.labels.size(); ++i) {
            std::cout << (i ? " | " : " ");
            for (int x : r.labels[i].a) std::cout << x;
        }
        std::cout << "\n";
    }
    return 0;
}

int check_against_tables() {
    int bad = 0;
    for (auto& row : fixtures::table2()) {
        DecompositionReport rep = wedge_decompose(row.n);
        std::vector<Weight> got, expect = row.components;
        for (auto& c : rep.components) {
            if (c.multiplicity != 1) ++bad;
            got.push_back(c.hw);
        }
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        if (got != expect) {
            std::cerr << "mismatch: wedge power " << row.n << "\n";
            ++bad;
        }
    }
    for (auto& row : fixtures::table3())
        for (int k = 3; k <= 4; ++k) {
            std::vector<Weight> expect;
            for (auto& c : row.comps)
                if (k + c[3] >= 0) expect.emplace_back(c[0], c[1], c[2], k + c[3]);
            std::sort(expect.begin(), expect.end());
            if (pieri_decompose(row.mu, k, PieriSide::dual) != expect) {
                std::cerr << "mismatch: tensor row " << row.mu.str() << " at k=" << k << "\n";
                ++bad;
            }
        }
    return bad;
}

int cmd_decompose(const RunConfig& cfg) {
    if (cfg.check_tables) {
        int bad = check_against_tables();
        std::cout << (bad ? "table check: FAILED\n" : "table check: ok\n");
        return bad ? 1 : 0;
    }
    if (cfg.wedge_n > 0) {
        DecompositionReport rep = wedge_decompose(cfg.wedge_n);
        emit(to_json(rep), cfg);
        return 0;
    }
    if (cfg.mu_str.empty() || cfg.lambda_str.empty())
        throw CLI::ValidationError("decompose", "need --wedge n or both --mu and --lambda");
    Weight mu = parse_weight(cfg.mu_str);
    Weight l = parse_weight(cfg.lambda_str);
    long cap = effective_cap(cfg.cap);
    Irrep Vmu = build_irrep(mu, cap);
    Irrep Vl = build_irrep(l, cap);
    if (static_cast<long>(Vmu.rep.dim) * Vl.rep.dim > 4 * cap)
        throw std::invalid_argument("decompose: product dimension exceeds the workable cap");
    DecompositionReport rep = decompose_module(tensor(Vmu.rep, Vl.rep));
    emit(to_json(rep), cfg);
    return 0;
}

int cmd_singular_find(const RunConfig& cfg) {
    Weight l = parse_weight(cfg.lambda_str);
    Irrep V = build_irrep(l, effective_cap(cfg.cap));
    GvmOps ops(V);
    SingularReport rep = find_singular(V, ops, cfg.degree, cfg.threads);
    emit(to_json(rep), cfg);
    for (bool ok : rep.construction_matches)
        if (!ok) return 1;
    return 0;
}

int cmd_singular_verify(const RunConfig& cfg) {
    std::ifstream in(cfg.in_path);
    if (!in) throw CLI::ValidationError("--in", "cannot open " + cfg.in_path);
    json j = json::parse(in);
    GvmElement e = gvm_element_from_json(j);
    if (e.zero()) {
        std::cerr << "verify: the zero element has no singularity status\n";
        return 2;
    }
    Irrep V = build_irrep(e.lambda, effective_cap(cfg.cap));
    for (auto& [b, c] : e.terms)
        if (b.v >= V.rep.dim)
            throw std::invalid_argument("verify: basis index out of range for V" + e.lambda.str());
    GvmOps ops(V);
    bool ok = is_singular(ops, e);
    std::cout << (ok ? "singular\n" : "not singular\n");
    return ok ? 0 : 1;
}

int cmd_singular_construct(const RunConfig& cfg) {
    auto fam = family_from_string(cfg.family);
    if (!fam)
        throw CLI::ValidationError(
            "--family", "expected one of thm5.3-1, thm5.3-2, thm5.3-3, thm5.4, thm5.5, thm5.6");
    Weight l = parse_weight(cfg.lambda_str);
    Irrep V = build_irrep(l, effective_cap(cfg.cap));
    GvmOps ops(V);
    GvmElement e = construct_closed_form(V, ops, *fam);
    bool ok = is_singular(ops, e);
    json out = to_json(e);
    out["is_singular"] = ok;
    emit(out, cfg);
    return ok ? 0 : 1;
}

int cmd_kr_verify(const RunConfig& cfg) {
    KrReport rep = kr_verify(cfg.bound, cfg.max_degree, effective_cap(cfg.cap), cfg.threads);
    if (!cfg.out_path.empty() || cfg.as_json) emit(to_json(rep), cfg);
    for (auto& e : rep.entries) {
        std::cout << e.lambda.str() << "  dim " << e.dim;
        if (e.skipped_cap) {
            std::cout << "  skipped (cap)\n";
            continue;
        }
        std::cout << "  degrees";
        bool any = false;
        for (size_t k = 0; k < e.singular_counts.size(); ++k)
            if (e.singular_counts[k]) {
                std::cout << " " << (k + 1) << ":" << e.singular_counts[k];
                any = true;
            }
        if (!any) std::cout << " none";
        std::cout << (e.degenerate ? "  degenerate" : "  irreducible")
                  << (e.conjectured ? " (listed)" : " (not listed)")
                  << (e.trivial ? " [trivial]" : "") << "\n";
    }
    std::cout << (rep.consistent ? "classification: consistent with the conjectured list\n"
                                 : "classification: DISCREPANCY\n");
    return rep.consistent ? 0 : 1;
}

void run_quiet(const std::string& name, const std::function<bool()>& f, int& bad) {
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::cout << name << ": error (" << e.what() << ")\n";
        ++bad;
        return;
    }
    std::cout << name << (ok ? ": ok" : ": FAILED") << "\n";
    if (!ok) ++bad;
}

int cmd_selfcheck(const RunConfig& cfg) {
    int bad = 0;
    auto table_ok = [&](const Weight& mu, const std::vector<fixtures::WeightRow>& rows,
                        bool with_mult) {
        Irrep V = build_irrep(mu, effective_cap(cfg.cap));
        auto ch = V.rep.character();
        if (rows.size() != ch.size()) return false;
        long total = 0;
        for (auto& r : rows) {
            if (r.wt != mu - weight_from_root_coords(r.k)) return false;
            auto it = ch.find(r.wt);
            if (it == ch.end()) return false;
            if (with_mult) {
                if (it->second != r.mult) return false;
                total += r.mult;
            }
        }
        return !with_mult || total == V.rep.dim;
    };
    run_quiet("table V(omega2)",
              [&] { return table_ok(Weight(0, 1, 0, 0), fixtures::table1(), true); }, bad);
    run_quiet("table V(omega1+omega3)",
              [&] { return table_ok(Weight(1, 0, 1, 0), fixtures::table5(), true); }, bad);
    run_quiet("table V(2omega1+omega4)",
              [&] { return table_ok(Weight(2, 0, 0, 1), fixtures::table67(), true); }, bad);
    run_quiet("table V(omega1+omega2)",
              [&] { return table_ok(Weight(1, 1, 0, 0), fixtures::table9(), false); }, bad);
    run_quiet("wedge and tensor tables", [&] { return check_against_tables() == 0; }, bad);
    run_quiet(
        "operator identities",
        [&] {
            for (auto& l : {Weight(0, 0, 0, 0), Weight(1, 0, 0, 0)}) {
                Irrep V = build_irrep(l);
                GvmOps ops(V);
                for (int k = 0; k <= 4; ++k) {
                    Slice s = build_slice(V, k);
                    for (auto& mono : s.basis) {
                        GvmElement u;
                        u.lambda = V.lambda;
                        u.add_term(mono, Rat(1));
                        for (int i = 1; i <= 4; ++i)
                            if (!(ops.raising(i, u) == ops.bracket_L0(i, i + 1, u))) return false;
                        if (!(ops.x5d45(u) == ops.bracket_x5d45(u))) return false;
                    }
                }
            }
            return true;
        },
        bad);
    run_quiet(
        "split Casimir eigenvalues",
        [&] {
            for (int m = 0; m <= 3; ++m) {
                Rat expect = rat(3 * m + 2, 25);
                if (chi_explicit(Weight(1, 0, 1, 0), Weight(m, 0, 0, 1), RootCoords()) != expect)
                    return false;
            }
            Irrep V = build_irrep(Weight(1, 0, 0, 1));
            SparseMat c = casimir_matrix(V.rep);
            SparseMat expect = SparseMat::identity(V.rep.dim);
            expect.scale(casimir_scalar(V.lambda));
            return c == expect;
        },
        bad);
    run_quiet(
        "leading-shape filter pins",
        [&] {
            Irrep triv = build_irrep(Weight(0, 0, 0, 0));
            GvmOps triv_ops(triv);
            Irrep probe = build_irrep(Weight(1, 1, 1, 1));
            GvmOps probe_ops(probe);
            auto s01 = compute_S_prime(0, 1, triv, triv_ops, probe, probe_ops);
            auto s11 = compute_S_prime(1, 1, triv, triv_ops, probe, probe_ops);
            return s01.members.size() == 1 && s11.members.empty();
        },
        bad);
    std::cout << (bad ? "selfcheck: FAILED\n" : "selfcheck: ok\n");
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in generalized Verma modules over E(5,10)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cap", cfg.cap, "dimension cap for built modules");
        sub->add_flag("--json", cfg.as_json, "emit JSON");
        sub->add_option("--out", cfg.out_path, "write JSON to a file");
    };

    CLI::App* dim = app.add_subcommand("dim", "dimension of V(lambda)");
    dim->add_option("--lambda", cfg.lambda_str, "weight m,n,p,q")->required();

    CLI::App* tables = app.add_subcommand("tables", "weight table of V(lambda)");
    tables->add_option("--lambda", cfg.lambda_str, "weight m,n,p,q")->required();
    add_common(tables);

    CLI::App* dec = app.add_subcommand("decompose", "tensor or wedge decomposition");
    dec->add_option("--mu", cfg.mu_str, "first factor weight");
    dec->add_option("--lambda", cfg.lambda_str, "second factor weight");
    dec->add_option("--wedge", cfg.wedge_n, "wedge power of V(omega2)");
    dec->add_flag("--check-tables", cfg.check_tables, "diff against the embedded fixtures");
    add_common(dec);

    CLI::App* sing = app.add_subcommand("singular", "singular vector workflows");
    sing->require_subcommand(1);
    CLI::App* sfind = sing->add_subcommand("find", "exhaustive kernel search at one degree");
    sfind->add_option("--lambda", cfg.lambda_str, "weight m,n,p,q")->required();
    sfind->add_option("--degree", cfg.degree, "degree k >= 1")->required();
    sfind->add_option("--threads", cfg.threads, "parallelism width");
    add_common(sfind);
    CLI::App* sverify = sing->add_subcommand("verify", "verify a serialized element");
    sverify->add_option("--in", cfg.in_path, "input JSON file")->required();
    sverify->add_option("--cap", cfg.cap, "dimension cap");
    CLI::App* sconstruct = sing->add_subcommand("construct", "closed-form construction");
    sconstruct
        ->add_option("--family", cfg.family, "thm5.3-1|thm5.3-2|thm5.3-3|thm5.4|thm5.5|thm5.6")
        ->required();
    sconstruct->add_option("--lambda", cfg.lambda_str, "weight m,n,p,q")->required();
    add_common(sconstruct);

    CLI::App* kr = app.add_subcommand("kr-verify", "classification scan over a weight grid");
    kr->add_option("--bound", cfg.bound, "grid bound B (default 2)");
    kr->add_option("--max-degree", cfg.max_degree, "degree bound K (default 4)");
    kr->add_option("--threads", cfg.threads, "parallelism width");
    add_common(kr);

    CLI::App* self = app.add_subcommand("selfcheck", "embedded fixtures and operator identities");
    self->add_option("--cap", cfg.cap, "dimension cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dim->parsed()) return cmd_dim(cfg);
        if (tables->parsed()) return cmd_tables(cfg);
        if (dec->parsed()) return cmd_decompose(cfg);
        if (sing->parsed()) {
            if (sfind->parsed()) return cmd_singular_find(cfg);
            if (sverify->parsed()) return cmd_singular_verify(cfg);
            if (sconstruct->parsed()) return cmd_singular_construct(cfg);
        }
        if (kr->parsed()) return cmd_kr_verify(cfg);
        if (self->parsed()) return cmd_selfcheck(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
