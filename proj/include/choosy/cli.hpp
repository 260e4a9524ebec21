#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choosy/approx.hpp"
#include "choosy/choosability.hpp"
#include "choosy/errors.hpp"
#include "choosy/exact.hpp"
#include "choosy/graph.hpp"
#include "choosy/io.hpp"
#include "choosy/reductions/constraint_graph.hpp"
#include "choosy/reductions/g_phi_p.hpp"
#include "choosy/reductions/h_phi.hpp"
#include "choosy/reductions/vertex_cover.hpp"

namespace choosy {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitBudget = 3 };

namespace detail {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json one_based(const VertexSet& vs) {
    json out = json::array();
    for (Vertex v : vs) out.push_back(v + 1);
    return out;
}

inline std::string one_based_text(const VertexSet& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
    out << '}';
    return out.str();
}

/// Raw mt19937_64 output keeps generated instances identical across standard libraries.
inline bool coin(std::mt19937_64& rng, double prob) {
    if (prob <= 0.0) return false;
    if (prob >= 1.0) return true;
    const auto threshold = static_cast<std::uint64_t>(prob * 18446744073709551616.0);
    return rng() < threshold;
}

inline Graph random_gnp(int n, double prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng, prob)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph(n, edges);
}

/// Two hubs (vertices 0 and 1) joined by internally disjoint paths of the given lengths.
inline Graph theta_graph(const std::vector<int>& lengths) {
    int ones = 0;
    for (int len : lengths) {
        if (len < 1) throw UsageError("theta path lengths must be positive");
        ones += len == 1 ? 1 : 0;
    }
    if (ones > 1) throw UsageError("at most one theta path may have length 1");
    Graph g(2);
    for (int len : lengths) {
        Vertex prev = 0;
        for (int step = 1; step < len; ++step) {
            const Vertex v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

inline CnfFormula random_formula(int vars, int clauses, std::uint64_t seed) {
    if (vars < 3) throw UsageError("a 3-CNF formula needs at least 3 variables");
    if (clauses < 1) throw UsageError("a formula needs at least one clause");
    std::mt19937_64 rng(seed);
    CnfFormula phi;
    phi.num_vars = vars;
    for (int j = 0; j < clauses; ++j) {
        std::array<int, 3> clause{};
        for (int r = 0; r < 3;) {
            const int var = static_cast<int>(rng() % static_cast<std::uint64_t>(vars)) + 1;
            const int literal = (rng() & 1) ? -var : var;
            bool clash = false;
            for (int q = 0; q < r; ++q) clash = clash || std::abs(clause[q]) == var;
            if (!clash) clause[r++] = literal;
        }
        phi.clauses.push_back(clause);
    }
    return phi;
}

struct Context {
    bool json_output = false;
    std::uint64_t budget = 50'000'000;
    std::ostream& out;
    std::ostream& err;
    Report report;
    std::ostringstream text;
};

inline std::string artifact_prefix(const std::string& path) {
    const std::string suffix = ".roles.json";
    if (path.size() > suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return path.substr(0, path.size() - suffix.size());
    return path;
}

inline void save_artifact(const ReductionArtifact& art, const std::string& prefix) {
    write_file(prefix + ".graph", write_graph(art.graph));
    write_file(prefix + ".roles.json", artifact_sidecar(art).dump(2) + "\n");
}

inline void describe_artifact(Context& ctx, const ReductionArtifact& art, const std::string& out_prefix) {
    const auto bip = is_bipartite(art.graph);
    ctx.report.verdicts["kind"] = art.kind;
    ctx.report.verdicts["vertices"] = art.graph.order();
    ctx.report.verdicts["edges"] = art.graph.size();
    ctx.report.verdicts["bipartite"] = bip.bipartite;
    ctx.report.verdicts["triangle_free"] = is_triangle_free(art.graph);
    ctx.report.witnesses["graph_digest"] = sha256_hex(write_graph(art.graph));
    ctx.text << art.kind << ": " << art.graph.order() << " vertices, " << art.graph.size() << " edges"
             << (bip.bipartite ? ", bipartite" : "") << '\n';
    if (!out_prefix.empty()) {
        save_artifact(art, out_prefix);
        ctx.text << "wrote " << out_prefix << ".graph and " << out_prefix << ".roles.json\n";
    }
}

}  // namespace detail

/// Runs the command line; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Context;
    CLI::App app{"List-colouring choosability toolkit", "choosy"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_output = false;
    std::uint64_t budget = 50'000'000;
    app.add_flag("--json", json_output, "Emit the JSON report");
    app.add_option("--budget", budget, "Node budget for exhaustive searches")->check(CLI::PositiveNumber);

    std::string graph_path, cnf_path, artifact_path, tau_bits, out_prefix;
    bool oracle = false, witness = false, minimize = false, exact = false;
    int p = 1;

    auto* stats = app.add_subcommand("stats", "Order, size, bipartiteness, triangles, diameter, girth");
    stats->add_option("graph", graph_path)->required();
    auto* core = app.add_subcommand("core", "Core after peeling degree-1 vertices, with its classification");
    core->add_option("graph", graph_path)->required();
    auto* check2 = app.add_subcommand("check2", "Decide 2-choosability");
    check2->add_option("graph", graph_path)->required();
    check2->add_flag("--oracle", oracle, "Cross-check with exhaustive list enumeration (at most 6 vertices)");
    check2->add_flag("--witness", witness, "Print the offending core component");
    auto* near3 = app.add_subcommand("near3", "Decide near-3-choosability");
    near3->add_option("graph", graph_path)->required();
    near3->add_flag("--min", minimize, "Find a minimum independent deletion set");
    auto* del2 = app.add_subcommand("del2", "2-choosable deletion set");
    del2->add_option("graph", graph_path)->required();
    del2->add_flag("--exact", exact, "Exact minimum instead of the cycle-greedy approximation");

    auto* reduce = app.add_subcommand("reduce", "Hardness constructions");
    reduce->require_subcommand(1);
    auto* sat3 = reduce->add_subcommand("sat3", "3-SAT to near-3-choosability");
    sat3->add_option("cnf", cnf_path)->required();
    sat3->add_option("--out", out_prefix, "Write PREFIX.graph and PREFIX.roles.json");
    auto* planar = reduce->add_subcommand("planar3sat", "Planar 3-SAT to minimum near-3 deletion");
    planar->add_option("cnf", cnf_path)->required();
    planar->add_option("--p", p, "Petal parameter")->required()->check(CLI::PositiveNumber);
    planar->add_option("--out", out_prefix, "Write PREFIX.graph and PREFIX.roles.json");
    auto* vc = reduce->add_subcommand("vc", "Vertex cover to 2-choosable deletion");
    vc->add_option("graph", graph_path)->required();
    vc->add_option("--out", out_prefix, "Write PREFIX.graph and PREFIX.roles.json");

    auto* solution = app.add_subcommand("solution-from-assignment", "Deletion set from a satisfying assignment");
    solution->add_option("artifact", artifact_path, "PREFIX or PREFIX.roles.json")->required();
    solution->add_option("--tau", tau_bits, "Assignment bits, x1 first")->required();

    auto* verify = app.add_subcommand("verify", "Structural self-checks");
    verify->require_subcommand(1);
    auto* gadgets = verify->add_subcommand("gadgets", "Constraint graph and gadget invariants");
    gadgets->add_option("--p", p, "Petal parameter")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "Seeded instance generators");
    gen->require_subcommand(1);
    std::uint64_t seed = 1;
    int n = 0, vars = 3, clauses = 1;
    double prob = 0.5;
    std::vector<int> lengths;
    auto* gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
    gnp->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    gnp->add_option("--prob", prob)->required()->check(CLI::Range(0.0, 1.0));
    gnp->add_option("--seed", seed);
    gnp->add_option("--out", out_prefix, "Output file");
    auto* cycle = gen->add_subcommand("cycle", "Cycle C_n");
    cycle->add_option("--n", n)->required();
    cycle->add_option("--out", out_prefix, "Output file");
    auto* theta = gen->add_subcommand("theta", "Theta graph from path lengths");
    theta->add_option("lengths", lengths)->required()->expected(2, 16);
    theta->add_option("--out", out_prefix, "Output file");
    auto* formula = gen->add_subcommand("formula", "Random 3-CNF formula");
    formula->add_option("--vars", vars)->check(CLI::PositiveNumber);
    formula->add_option("--clauses", clauses)->check(CLI::PositiveNumber);
    formula->add_option("--seed", seed);
    formula->add_option("--out", out_prefix, "Output file");

    std::vector<std::string> argv_store{"choosy"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Context ctx{json_output, budget, out, err, {}, {}};
    {
        std::string command;
        for (const auto& a : args)
            if (a != "--json") command += (command.empty() ? "" : " ") + a;
        ctx.report.command = command;
    }
    ExactOptions exact_options;
    exact_options.budget = budget;
    exact_options.max_vertices = 64;

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    auto load_graph = [&]() {
        const std::string text = read_file(graph_path);
        ctx.report.input_digest = sha256_hex(text);
        return parse_graph(text);
    };
    auto load_cnf = [&]() {
        const std::string text = read_file(cnf_path);
        ctx.report.input_digest = sha256_hex(text);
        return parse_dimacs_cnf(text);
    };
    auto emit_generated = [&](const std::string& text) {
        ctx.report.input_digest = sha256_hex(text);
        ctx.report.witnesses["text"] = text;
        if (!out_prefix.empty()) {
            write_file(out_prefix, text);
            ctx.text << "wrote " << out_prefix << '\n';
        } else {
            ctx.text << text;
        }
    };

    try {
        if (stats->parsed()) {
            const Graph g = load_graph();
            const auto bip = is_bipartite(g);
            const auto diam = diameter(g);
            const auto gir = girth(g);
            auto& v = ctx.report.verdicts;
            v["vertices"] = g.order();
            v["edges"] = g.size();
            v["bipartite"] = bip.bipartite;
            v["triangle_free"] = is_triangle_free(g);
            v["diameter"] = diam ? json(*diam) : json(nullptr);
            v["girth"] = gir ? json(*gir) : json(nullptr);
            if (!bip.bipartite) ctx.report.witnesses["odd_cycle"] = detail::one_based(bip.odd_cycle);
            ctx.text << "vertices " << g.order() << "\nedges " << g.size() << "\nbipartite "
                     << (bip.bipartite ? "yes" : "no") << "\ntriangle-free " << (is_triangle_free(g) ? "yes" : "no")
                     << "\ndiameter " << (diam ? std::to_string(*diam) : "infinite") << "\ngirth "
                     << (gir ? std::to_string(*gir) : "none") << '\n';
        } else if (core->parsed()) {
            const Graph g = load_graph();
            const Core c = compute_core(g);
            json comps = json::array();
            ctx.text << "core vertices " << detail::one_based_text(c.kept) << '\n';
            for (const auto& cls : classify_core(c.graph)) {
                VertexSet members;
                for (Vertex v : cls.component) members.push_back(c.kept[v]);
                comps.push_back({{"kind", to_string(cls.kind)}, {"m", cls.m}, {"vertices", detail::one_based(members)}});
                ctx.text << "component " << to_string(cls.kind);
                if (cls.m > 0) ctx.text << " m=" << cls.m;
                ctx.text << ' ' << detail::one_based_text(members) << '\n';
            }
            ctx.report.verdicts["core_vertices"] = static_cast<int>(c.kept.size());
            ctx.report.witnesses["core"] = detail::one_based(c.kept);
            ctx.report.witnesses["components"] = comps;
        } else if (check2->parsed()) {
            const Graph g = load_graph();
            const auto verdict = is_2_choosable(g);
            ctx.report.verdicts["2_choosable"] = verdict.choosable;
            ctx.text << (verdict.choosable ? "2-choosable" : "not 2-choosable") << '\n';
            if (!verdict.choosable) {
                ctx.report.witnesses["core_component"] = detail::one_based(verdict.witness);
                if (witness) ctx.text << "witness core component " << detail::one_based_text(verdict.witness) << '\n';
            }
            if (oracle) {
                OracleOptions opts;
                opts.budget = budget;
                const auto ov = is_k_choosable_exhaustive(g, 2, opts);
                ctx.report.search_nodes = ov.stats.nodes;
                ctx.report.verdicts["oracle_2_choosable"] = ov.choosable;
                ctx.report.verdicts["oracle_agrees"] = ov.choosable == verdict.choosable;
                if (ov.bad) ctx.report.witnesses["bad_lists"] = *ov.bad;
                ctx.text << "oracle " << (ov.choosable ? "2-choosable" : "not 2-choosable")
                         << (ov.choosable == verdict.choosable ? " (agrees)" : " (DISAGREES)") << '\n';
                if (ov.bad && witness) ctx.text << "uncolourable lists\n" << format_list_assignment(*ov.bad);
                if (ov.choosable != verdict.choosable) code = kExitNegative;
            }
            if (!verdict.choosable) code = kExitNegative;
        } else if (near3->parsed()) {
            const Graph g = load_graph();
            if (minimize) {
                const auto best = min_near_3(g, exact_options);
                ctx.report.verdicts["near_3_choosable"] = best.has_value();
                if (best) {
                    ctx.report.search_nodes = best->stats.nodes;
                    ctx.report.verdicts["minimum"] = best->size;
                    ctx.report.witnesses["independent_set"] = detail::one_based(best->set);
                    ctx.text << "near-3-choosable; minimum independent deletion set of size " << best->size << ' '
                             << detail::one_based_text(best->set) << '\n';
                } else {
                    ctx.text << "not near-3-choosable\n";
                    code = kExitNegative;
                }
            } else {
                const auto d = near_3_decide(g, exact_options);
                ctx.report.verdicts["near_3_choosable"] = d.has_value();
                if (d) {
                    ctx.report.witnesses["independent_set"] = detail::one_based(d->independent);
                    ctx.text << "near-3-choosable; independent set " << detail::one_based_text(d->independent) << '\n';
                } else {
                    ctx.text << "not near-3-choosable\n";
                    code = kExitNegative;
                }
            }
        } else if (del2->parsed()) {
            const Graph g = load_graph();
            VertexSet set;
            if (exact) {
                const auto r = min_2_del_exact(g, exact_options);
                ctx.report.search_nodes = r.stats.nodes;
                set = r.set;
                ctx.report.verdicts["method"] = "exact";
            } else {
                set = approx_2_del(g).set;
                ctx.report.verdicts["method"] = "approx";
            }
            ctx.report.verdicts["size"] = static_cast<int>(set.size());
            ctx.report.witnesses["deletion_set"] = detail::one_based(set);
            ctx.text << (exact ? "minimum" : "approximate") << " 2-choosable deletion set of size " << set.size()
                     << ' ' << detail::one_based_text(set) << '\n';
        } else if (sat3->parsed()) {
            detail::describe_artifact(ctx, build_H_phi(load_cnf()), out_prefix);
        } else if (planar->parsed()) {
            const CnfFormula phi = load_cnf();
            const auto art = build_G_phi_p(phi, p);
            ctx.report.verdicts["sign_balanced"] = is_sign_balanced(phi);
            detail::describe_artifact(ctx, art, out_prefix);
        } else if (vc->parsed()) {
            detail::describe_artifact(ctx, triangle_reduction(load_graph()), out_prefix);
        } else if (solution->parsed()) {
            const std::string prefix = detail::artifact_prefix(artifact_path);
            const std::string sidecar_text = read_file(prefix + ".roles.json");
            ctx.report.input_digest = sha256_hex(sidecar_text);
            const Sidecar sc = parse_sidecar(json::parse(sidecar_text));
            if (!sc.formula) throw detail::UsageError("artifact has no formula");
            const auto tau = parse_assignment_bits(tau_bits);
            if (static_cast<int>(tau.size()) != sc.formula->num_vars)
                throw detail::UsageError("assignment has " + std::to_string(tau.size()) + " bits, formula has " +
                                         std::to_string(sc.formula->num_vars) + " variables");
            if (!sc.formula->satisfied_by(tau)) throw detail::UsageError("assignment does not satisfy the formula");
            ReductionArtifact art;
            if (sc.kind == "h-phi") art = build_H_phi(*sc.formula);
            else if (sc.kind == "g-phi-p") art = build_G_phi_p(*sc.formula, sc.p);
            else throw detail::UsageError("no assignment-driven solution for artifact kind " + sc.kind);
            if (std::filesystem::exists(prefix + ".graph") && !(parse_graph(read_file(prefix + ".graph")) == art.graph))
                throw detail::UsageError("graph file does not match the construction recorded in the sidecar");
            VertexSet a = sc.kind == "h-phi" ? decomposition_from_assignment(art, tau).independent
                                             : deletion_set_from_assignment(art, tau);
            ctx.report.verdicts["kind"] = sc.kind;
            ctx.report.verdicts["size"] = static_cast<int>(a.size());
            ctx.report.verdicts["valid"] = is_near_3_decomposition(art.graph, a);
            ctx.report.witnesses["independent_set"] = detail::one_based(a);
            ctx.text << "independent set of size " << a.size() << ' ' << detail::one_based_text(a) << '\n';
        } else if (gadgets->parsed()) {
            ctx.report.input_digest = sha256_hex("verify gadgets p=" + std::to_string(p));
            json items = json::array();
            bool all = true;
            auto record = [&](const std::string& name, bool ok, const std::string& detail_text) {
                items.push_back({{"name", name}, {"passed", ok}, {"detail", detail_text}});
                ctx.text << (ok ? "PASS " : "FAIL ") << name << ": " << detail_text << '\n';
                all = all && ok;
            };
            const auto P = constraint_graph_P();
            record("P has 17 vertices and 31 edges", P.graph.order() == 17 && P.graph.size() == 31,
                   std::to_string(P.graph.order()) + " vertices, " + std::to_string(P.graph.size()) + " edges");
            for (const auto& item : verify_constraint_graph(P)) record(item.name, item.passed, item.detail);
            const auto fg = build_forbidden_gadget(p);
            record("forbidden gadget", fg.graph.order() == 3 * p + 5 && is_bipartite(fg.graph).bipartite &&
                                           !is_2_choosable(fg.graph).choosable,
                   std::to_string(fg.graph.order()) + " vertices");
            const auto cg = build_clause_gadget(p);
            record("clause gadget", cg.graph.order() == 9 * p + 18 && is_bipartite(cg.graph).bipartite &&
                                        !is_2_choosable(cg.graph).choosable,
                   std::to_string(cg.graph.order()) + " vertices");
            for (bool positive : {true, false}) {
                const auto eg = build_edge_gadget(positive, p);
                const auto& info = eg.edge_gadgets.front();
                VertexSet cores;
                for (const auto& f : eg.forbidden) cores.push_back(f.core);
                bool sides = true;
                for (const VertexSet* side : {&info.blue, &info.red}) {
                    VertexSet a = cores;
                    a.insert(a.end(), side->begin(), side->end());
                    std::sort(a.begin(), a.end());
                    sides = sides && is_near_3_decomposition(eg.graph, a);
                }
                record(std::string(positive ? "positive" : "negative") + " edge gadget",
                       info.own_vertices <= 84 * p && is_bipartite(eg.graph).bipartite &&
                           !is_2_choosable(eg.graph).choosable && sides,
                       std::to_string(info.own_vertices) + " own vertices, blue and red sets " +
                           (sides ? "valid" : "INVALID"));
            }
            ctx.report.verdicts["all_passed"] = all;
            ctx.report.witnesses["checks"] = items;
            if (!all) code = kExitNegative;
        } else if (gnp->parsed()) {
            emit_generated(write_graph(detail::random_gnp(n, prob, seed)));
        } else if (cycle->parsed()) {
            emit_generated(write_graph(detail::cycle_graph(n)));
        } else if (theta->parsed()) {
            emit_generated(write_graph(detail::theta_graph(lengths)));
        } else if (formula->parsed()) {
            emit_generated(write_dimacs_cnf(detail::random_formula(vars, clauses, seed)));
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    ctx.report.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    if (ctx.json_output) out << serialize_report(ctx.report);
    else out << ctx.text.str();
    return code;
}

}  // namespace choosy
