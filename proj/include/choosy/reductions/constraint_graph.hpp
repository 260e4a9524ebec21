#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "choosy/choosability.hpp"
#include "choosy/exact.hpp"
#include "choosy/graph.hpp"
#include "choosy/reductions/artifact.hpp"

namespace choosy {

/// Vertex names of the 17-vertex constraint graph; id i carries name kConstraintNames[i].
inline constexpr std::array<const char*, 17> kConstraintNames = {
    "v1", "v2", "v3", "w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9", "w10", "w11", "w12", "w13", "w14"};

inline Vertex constraint_vertex(const std::string& name) {
    for (std::size_t i = 0; i < kConstraintNames.size(); ++i)
        if (name == kConstraintNames[i]) return static_cast<Vertex>(i);
    throw std::invalid_argument("unknown constraint-graph vertex " + name);
}

/// The 31 edges. The two long collinear segments v3-w4 and v3-w7 of the drawing pass
/// through w14 and w5 and are read as the paths v3-w14-w4 and v3-w5-w7.
inline const std::vector<std::pair<std::string, std::string>>& constraint_edge_names() {
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"w1", "w2"},  {"w1", "w12"}, {"w1", "w8"},   {"w1", "w6"},   {"w1", "v2"},   {"w2", "v1"},
        {"w2", "w3"},  {"w3", "w13"}, {"w3", "v3"},   {"w3", "w7"},   {"w3", "w11"},  {"v1", "w12"},
        {"v1", "w13"}, {"v1", "w8"},  {"v1", "w11"},  {"v2", "w4"},   {"v2", "w9"},   {"v2", "w5"},
        {"v3", "w5"},  {"v3", "w14"}, {"v3", "w10"},  {"w4", "w6"},   {"w4", "w14"},  {"w5", "w7"},
        {"w6", "w9"},  {"w6", "w10"}, {"w7", "w10"},  {"w8", "w9"},   {"w9", "w12"},  {"w10", "w11"},
        {"w10", "w13"}};
    return edges;
}

inline std::vector<Edge> constraint_edges() {
    std::vector<Edge> out;
    for (const auto& [a, b] : constraint_edge_names()) out.emplace_back(constraint_vertex(a), constraint_vertex(b));
    return out;
}

inline ReductionArtifact constraint_graph_P() {
    const auto edges = constraint_edges();
    ReductionArtifact art;
    art.kind = "constraint-graph";
    art.graph = Graph(17, edges);
    for (std::size_t i = 0; i < kConstraintNames.size(); ++i) {
        art.graph.set_label(static_cast<Vertex>(i), kConstraintNames[i]);
        art.roles.push_back(Role{RoleKind::Constraint, -1, -1, -1, static_cast<int>(i) + 1, kConstraintNames[i], ""});
    }
    return art;
}

/// Independent extension of each proper subset I of {v1, v2, v3}, indexed by the bitmask of
/// I (bit r set when v_{r+1} is in I). Removing the extension leaves a 2-choosable graph.
inline const std::array<std::vector<std::string>, 7>& constraint_extensions() {
    static const std::array<std::vector<std::string>, 7> table = {{
        {"w1", "w3", "w4", "w5", "w9", "w10"},                     // {}
        {"v1", "w1", "w3", "w4", "w5", "w9", "w10"},               // {v1}
        {"v2", "w2", "w6", "w7", "w8", "w11", "w12", "w13"},       // {v2}
        {"v1", "v2", "w3", "w10", "w14"},                          // {v1, v2}
        {"v3", "w2", "w6", "w7", "w8", "w11", "w12", "w13"},       // {v3}
        {"v1", "v3", "w1", "w7", "w9"},                            // {v1, v3}
        {"v2", "v3", "w2", "w6", "w7", "w12", "w13"},              // {v2, v3}
    }};
    return table;
}

inline VertexSet constraint_extension(unsigned subset_mask) {
    if (subset_mask > 6) throw std::invalid_argument("extension exists only for proper subsets of {v1,v2,v3}");
    VertexSet out;
    for (const auto& name : constraint_extensions()[subset_mask]) out.push_back(constraint_vertex(name));
    std::sort(out.begin(), out.end());
    return out;
}

/// Members of the maximal independent set {w1, w3, w4, w9, w10}; each has exactly one
/// neighbour among v1, v2, v3.
inline VertexSet constraint_single_contact_set() {
    VertexSet out;
    for (const char* name : {"w1", "w3", "w4", "w9", "w10"}) out.push_back(constraint_vertex(name));
    return out;
}

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline std::string names_of(const Graph& g, const VertexSet& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << (g.has_labels() ? g.label(vs[i]) : std::to_string(vs[i] + 1));
    out << '}';
    return out.str();
}

/// Structural checks on the constraint graph: the odd 5-cycle, the unique maximal
/// independent set over {v1,v2,v3} and its failing remainder, and the seven extensions.
inline std::vector<CheckItem> verify_constraint_graph(const ReductionArtifact& art) {
    const Graph& p = art.graph;
    std::vector<CheckItem> report;
    auto name = [&](const char* n) { return constraint_vertex(n); };

    {
        VertexSet cycle{name("v2"), name("w5"), name("v3"), name("w14"), name("w4")};
        bool ok = p.order() == 17 && is_cycle_of(p, cycle) && cycle.size() % 2 == 1;
        report.push_back({"a: odd cycle <v2,w5,v3,w14,w4>", ok, ok ? "present" : "missing"});
        auto bip = is_bipartite(p);
        report.push_back({"a: not bipartite", !bip.bipartite,
                          bip.bipartite ? "graph is bipartite" : "odd cycle " + names_of(p, bip.odd_cycle)});
    }
    {
        const VertexSet u{name("v1"), name("v2"), name("v3")};
        VertexSet expected{name("v1"), name("v2"), name("v3"), name("w6"), name("w7")};
        std::sort(expected.begin(), expected.end());
        std::vector<VertexSet> containing;
        for (const auto& s : maximal_independent_sets(p))
            if (std::includes(s.begin(), s.end(), u.begin(), u.end())) containing.push_back(s);
        bool unique = containing.size() == 1 && containing.front() == expected;
        std::string detail = std::to_string(containing.size()) + " maximal independent set(s) contain U";
        if (!containing.empty()) detail += ", first " + names_of(p, containing.front());
        report.push_back({"b: unique maximal independent set over U", unique, detail});

        auto [rest, kept] = p.without(expected);
        auto verdict = is_2_choosable(rest);
        VertexSet witness;
        for (Vertex v : verdict.witness) witness.push_back(kept[v]);
        report.push_back({"b: core of P minus U-bar is outside C", !verdict.choosable,
                          verdict.choosable ? "remainder is 2-choosable" : "offending core " + names_of(p, witness)});
    }
    for (unsigned mask = 0; mask < 7; ++mask) {
        VertexSet ext = constraint_extension(mask);
        VertexSet expect_u, got_u;
        for (int r = 0; r < 3; ++r)
            if (mask >> r & 1) expect_u.push_back(r);
        for (Vertex v : ext)
            if (v < 3) got_u.push_back(v);
        bool independent = is_independent(p, ext);
        bool choosable = is_2_choosable_deletion(p, ext);
        bool ok = independent && choosable && expect_u == got_u;
        std::string detail = names_of(p, ext) + (independent ? " independent" : " NOT independent") +
                             (choosable ? ", remainder 2-choosable" : ", remainder NOT 2-choosable");
        VertexSet subset;
        for (Vertex v : expect_u) subset.push_back(v);
        report.push_back({"c: extension of " + names_of(p, subset), ok, detail});
    }
    {
        VertexSet s = constraint_single_contact_set();
        bool ok = is_independent(p, s);
        for (Vertex w : s) {
            int contacts = 0;
            for (Vertex v : {0, 1, 2}) contacts += p.adjacent(w, v) ? 1 : 0;
            ok = ok && contacts == 1;
        }
        report.push_back({"single-contact set {w1,w3,w4,w9,w10}", ok,
                          ok ? "independent, one neighbour in U each" : "violated"});
    }
    return report;
}

}  // namespace choosy
