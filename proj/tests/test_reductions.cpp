#include <gtest/gtest.h>

#include <set>

#include "choosy/choosy.hpp"
#include "support/oracles.hpp"

using namespace choosy;

namespace {

CnfFormula formula(int n, std::vector<std::array<int, 3>> clauses) {
    CnfFormula phi;
    phi.num_vars = n;
    phi.clauses = std::move(clauses);
    return phi;
}

std::vector<bool> bits(int n, unsigned value) {
    std::vector<bool> tau(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tau[i] = value >> i & 1;
    return tau;
}

}  // namespace

TEST(ConstraintGraph, Shape) {
    const auto p = constraint_graph_P();
    EXPECT_EQ(p.graph.order(), 17);
    EXPECT_EQ(p.graph.size(), 31);
    const auto bip = is_bipartite(p.graph);
    EXPECT_FALSE(bip.bipartite);
    EXPECT_TRUE(is_cycle_of(p.graph, bip.odd_cycle));
    VertexSet five;
    for (const char* name : {"v2", "w5", "v3", "w14", "w4"}) five.push_back(constraint_vertex(name));
    EXPECT_TRUE(is_cycle_of(p.graph, five));
}

TEST(ConstraintGraph, AllChecksPass) {
    const auto items = verify_constraint_graph(constraint_graph_P());
    EXPECT_GE(items.size(), 9u);
    for (const auto& item : items) EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
}

TEST(ConstraintGraph, ExtensionsMatchBruteForce) {
    const Graph p = constraint_graph_P().graph;
    for (unsigned mask = 0; mask < 7; ++mask) {
        const VertexSet ext = constraint_extension(mask);
        EXPECT_TRUE(oracle::independent(p, ext));
        EXPECT_TRUE(is_2_choosable(oracle::remove(p, ext)).choosable);
        for (int r = 0; r < 3; ++r) {
            const bool in = std::binary_search(ext.begin(), ext.end(), r);
            EXPECT_EQ(in, static_cast<bool>(mask >> r & 1)) << "mask=" << mask << " r=" << r;
        }
    }
    EXPECT_EQ(names_of(p, constraint_extension(3)), "{v1,v2,w3,w10,w14}");
    EXPECT_THROW(constraint_extension(7), std::invalid_argument);
}

TEST(ConstraintGraph, FullSetHasUniqueFailingExtension) {
    const Graph p = constraint_graph_P().graph;
    std::vector<VertexSet> containing;
    for (const auto& m : maximal_independent_sets(p))
        if (m.size() >= 3 && m[0] == 0 && m[1] == 1 && m[2] == 2) containing.push_back(m);
    ASSERT_EQ(containing.size(), 1u);
    EXPECT_EQ(names_of(p, containing[0]), "{v1,v2,v3,w6,w7}");
    EXPECT_FALSE(is_2_choosable(oracle::remove(p, containing[0])).choosable);
}

TEST(ConstraintGraph, SingleContactSetIsMaximalIndependent) {
    const Graph p = constraint_graph_P().graph;
    const VertexSet s = constraint_single_contact_set();
    EXPECT_TRUE(oracle::independent(p, s));
    for (Vertex w : s) {
        int contacts = 0;
        for (Vertex v = 0; v < 3; ++v) contacts += p.adjacent(v, w);
        EXPECT_EQ(contacts, 1);
    }
}

TEST(HPhi, CountsTriangleFreeDiameter) {
    const auto art = build_H_phi(formula(3, {{1, 2, 3}}));
    EXPECT_EQ(art.graph.order(), 596);
    EXPECT_EQ(art.roles.size(), 596u);
    EXPECT_TRUE(is_triangle_free(art.graph));
    EXPECT_EQ(diameter(art.graph), 3);
    const auto two = build_H_phi(formula(4, {{1, 2, 4}, {-1, -3, -4}}));
    EXPECT_EQ(two.graph.order(), (4 + 28) * 34 * 2 + 34 + 1);
    EXPECT_TRUE(is_triangle_free(two.graph));
    EXPECT_EQ(diameter(two.graph), 3);
}

TEST(HPhi, RowsAreCompleteBipartiteMinusMatching) {
    const CnfFormula phi = formula(4, {{1, 2, 4}, {-1, -3, -4}});
    const auto art = build_H_phi(phi);
    const auto lay = layout_of(art);
    const int width = HPhiLayout::kColumns * phi.num_clauses();
    for (int row = 0; row < lay.rows(); ++row) {
        VertexSet members;
        for (Vertex v = 0; v < art.graph.order(); ++v)
            if (art.roles[v].row == row + 1) members.push_back(v);
        ASSERT_EQ(static_cast<int>(members.size()), 2 * width);
        const Graph induced = art.graph.induced(members);
        EXPECT_EQ(induced.size(), width * width - width) << "row=" << row;
        for (auto [a, b] : induced.edges()) EXPECT_NE(art.roles[members[a]].tag, art.roles[members[b]].tag);
        for (Vertex v : members) EXPECT_FALSE(induced.adjacent(
            static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), v) - members.begin()),
            static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), lay.mate(v)) - members.begin())));
    }
}

TEST(HPhi, DominatingAndApexAndEmbeddedCopy) {
    const CnfFormula phi = formula(3, {{1, -2, 3}});
    const auto art = build_H_phi(phi);
    const auto lay = layout_of(art);
    for (int c = 0; c < HPhiLayout::kColumns; ++c) {
        const Vertex d = lay.dominating(0, c);
        EXPECT_EQ(art.roles[d].kind, RoleKind::Dominating);
        EXPECT_TRUE(art.graph.adjacent(d, lay.apex()));
        for (int row = 0; row < lay.rows(); ++row)
            for (bool side : {true, false}) EXPECT_TRUE(art.graph.adjacent(d, lay.paired(0, row, c, side)));
    }
    EXPECT_EQ(art.roles[lay.apex()].kind, RoleKind::Apex);
    EXPECT_EQ(art.graph.degree(lay.apex()), HPhiLayout::kColumns);
    const Graph p = constraint_graph_P().graph;
    for (auto [a, b] : p.edges())
        EXPECT_TRUE(art.graph.adjacent(lay.constraint_site(phi, 0, a), lay.constraint_site(phi, 0, b)));
    for (Vertex v = 0; v < 17; ++v) {
        const Role& role = art.roles[lay.constraint_site(phi, 0, v)];
        EXPECT_EQ(role.kind, RoleKind::EmbeddedConstraint);
        EXPECT_EQ(role.label, kConstraintNames[v]);
    }
    // Second literal is negative: its site is the false vertex of row 2, column 2.
    EXPECT_EQ(lay.constraint_site(phi, 0, 1), lay.paired(0, 1, 1, false));
}

TEST(HPhi, FourColoring) {
    for (const auto& phi : {formula(3, {{1, 2, 3}}), formula(4, {{1, 2, 4}, {-1, -3, -4}})}) {
        const auto art = build_H_phi(phi);
        const auto lay = layout_of(art);
        const auto colouring = H_phi_four_coloring(art);
        EXPECT_TRUE(is_proper_coloring(art.graph, colouring.colors));
        for (int s = 0; s < phi.num_clauses(); ++s)
            for (int c = 0; c < HPhiLayout::kColumns; ++c) EXPECT_EQ(colouring.colors[lay.dominating(s, c)], 4);
        EXPECT_EQ(colouring.colors[lay.apex()], 1);
        EXPECT_FALSE(colouring.rule.empty());
    }
}

TEST(HPhi, DecompositionsFromEverySatisfyingAssignment) {
    const CnfFormula phi = formula(3, {{1, 2, -3}});
    const auto art = build_H_phi(phi);
    int valid = 0;
    for (unsigned value = 0; value < 8; ++value) {
        const auto tau = bits(3, value);
        if (!phi.satisfied_by(tau)) {
            EXPECT_THROW(decomposition_from_assignment(art, tau), std::invalid_argument);
            continue;
        }
        const auto d = decomposition_from_assignment(art, tau);
        EXPECT_TRUE(is_independent(art.graph, d.independent));
        EXPECT_TRUE(is_2_choosable(art.graph.without(d.independent).first).choosable);
        EXPECT_EQ(d.independent.size() + d.rest.size(), 596u);
        ++valid;
    }
    EXPECT_EQ(valid, 7);
}

TEST(HPhi, RejectsMalformedFormulas) {
    EXPECT_THROW(build_H_phi(formula(2, {{1, 2, 3}})), std::invalid_argument);
    EXPECT_THROW(build_H_phi(formula(3, {{1, 1, 2}})), std::invalid_argument);
    EXPECT_THROW(build_H_phi(formula(3, {})), std::invalid_argument);
}

TEST(Gadgets, VertexCounts) {
    for (int p = 1; p <= 4; ++p) {
        EXPECT_EQ(build_forbidden_gadget(p).graph.order(), 3 * p + 5);
        EXPECT_EQ(build_clause_gadget(p).graph.order(), 9 * p + 18);
        // Black vertices are gadget roots, so each forbidden gadget adds 3p+4 vertices.
        EXPECT_EQ(build_edge_gadget(false, p).graph.order(), 6 + 4 * (3 * p + 4));
        const auto positive = build_edge_gadget(true, p);
        EXPECT_EQ(positive.graph.order(), 15 + 10 * (3 * p + 4));
        EXPECT_LE(positive.edge_gadgets.at(0).own_vertices, 84 * p);
    }
    EXPECT_EQ(build_edge_gadget(true, 1).edge_gadgets.at(0).own_vertices, 83);
    EXPECT_EQ(build_edge_gadget(false, 1).graph.order(), 34);
    EXPECT_THROW(build_forbidden_gadget(0), std::invalid_argument);
    EXPECT_THROW(build_clause_gadget(-1), std::invalid_argument);
    EXPECT_THROW(build_edge_gadget(true, 0), std::invalid_argument);
}

TEST(Gadgets, BipartiteButNotTwoChoosable) {
    for (const auto& art : {build_forbidden_gadget(1), build_clause_gadget(1), build_edge_gadget(true, 1),
                            build_edge_gadget(false, 1)}) {
        EXPECT_TRUE(is_bipartite(art.graph).bipartite) << art.kind;
        EXPECT_FALSE(is_2_choosable(art.graph).choosable) << art.kind;
    }
}

TEST(Gadgets, ForbiddenStructure) {
    const auto art = build_forbidden_gadget(3);
    ASSERT_EQ(art.forbidden.size(), 1u);
    const auto& f = art.forbidden[0];
    EXPECT_EQ(f.root, 0);
    EXPECT_TRUE(art.graph.adjacent(f.root, f.core));
    ASSERT_EQ(f.petals.size(), 4u);
    for (const auto& petal : f.petals)
        EXPECT_TRUE(is_cycle_of(art.graph, VertexSet{f.core, petal[0], petal[1], petal[2]}));
    EXPECT_EQ(art.roles[f.root].kind, RoleKind::GadgetRoot);
    EXPECT_EQ(art.roles[f.core].kind, RoleKind::GadgetCore);
    // Removing the core leaves a forest, so the core alone is an independent deletion set.
    EXPECT_TRUE(is_near_3_decomposition(art.graph, VertexSet{f.core}));
}

TEST(Gadgets, ColourClassesPlusCoresAreDeletionSets) {
    for (bool positive : {true, false}) {
        const auto art = build_edge_gadget(positive, 1);
        const auto& eg = art.edge_gadgets.at(0);
        for (const VertexSet* side : {&eg.blue, &eg.red}) {
            VertexSet a = *side;
            for (const auto& f : art.forbidden) a.push_back(f.core);
            std::sort(a.begin(), a.end());
            EXPECT_TRUE(is_near_3_decomposition(art.graph, a)) << (positive ? "positive" : "negative");
        }
        for (const VertexSet* side : {&eg.blue, &eg.red})
            for (Vertex v : *side) {
                if (v == eg.x || v == eg.c) continue;
                EXPECT_EQ(art.roles[v].tag, side == &eg.blue ? "blue" : "red");
            }
    }
}

TEST(GPhiP, BuildsAndStaysWithinBounds) {
    for (int p = 1; p <= 2; ++p) {
        const CnfFormula phi = formula(3, {{1, 2, 3}});
        const auto art = build_G_phi_p(phi, p);
        EXPECT_LE(art.graph.order(), 279 * p * phi.num_clauses());
        EXPECT_TRUE(is_bipartite(art.graph).bipartite);
        EXPECT_EQ(art.clause_gadgets.size(), 1u);
        EXPECT_EQ(art.edge_gadgets.size(), 3u);
        for (const auto& f : art.forbidden) EXPECT_TRUE(art.graph.adjacent(f.root, f.core));
        for (const auto& eg : art.edge_gadgets) {
            EXPECT_EQ(art.roles[eg.x].kind, RoleKind::Variable);
            EXPECT_EQ(art.roles[eg.c].kind, RoleKind::Hexagon);
            EXPECT_EQ(eg.c, art.clause_gadgets[0].c[eg.position]);
        }
    }
}

TEST(GPhiP, RotationOrdersEdgeGadgets) {
    CnfFormula phi = formula(3, {{1, 2, 3}});
    phi.rotation = {{2, 0, 1}};
    const auto art = build_G_phi_p(phi, 1);
    ASSERT_EQ(art.edge_gadgets.size(), 3u);
    EXPECT_EQ(art.edge_gadgets[0].literal, 3);
    EXPECT_EQ(art.edge_gadgets[1].literal, 1);
    EXPECT_EQ(art.edge_gadgets[2].literal, 2);
}

TEST(GPhiP, DeletionSetsFromEverySatisfyingAssignment) {
    const CnfFormula phi = formula(3, {{1, 2, 3}});
    const auto art = build_G_phi_p(phi, 1);
    int valid = 0;
    for (unsigned value = 0; value < 8; ++value) {
        const auto tau = bits(3, value);
        if (!phi.satisfied_by(tau)) {
            EXPECT_THROW(deletion_set_from_assignment(art, tau), std::invalid_argument);
            continue;
        }
        const VertexSet a = deletion_set_from_assignment(art, tau);
        EXPECT_TRUE(is_independent(art.graph, a));
        EXPECT_TRUE(is_2_choosable(art.graph.without(a).first).choosable);
        EXPECT_LE(static_cast<int>(a.size()), 42 * phi.num_clauses());
        for (int i = 0; i < 3; ++i) EXPECT_EQ(std::binary_search(a.begin(), a.end(), i), static_cast<bool>(tau[i]));
        ++valid;
    }
    EXPECT_EQ(valid, 7);
}

TEST(GPhiP, BipartiteExactlyWhenSignBalanced) {
    const std::vector<CnfFormula> cases = {
        formula(3, {{1, 2, 3}}),
        formula(4, {{1, 2, 4}, {-1, -3, -4}}),
        formula(3, {{1, 2, 3}, {-1, 2, 3}}),
        formula(4, {{1, -2, 3}, {-1, 2, 4}}),
        formula(4, {{1, 2, 3}, {1, 2, 4}, {-3, -4, 1}}),
    };
    int balanced = 0, unbalanced = 0;
    for (const auto& phi : cases) {
        const bool b = is_sign_balanced(phi);
        (b ? balanced : unbalanced)++;
        EXPECT_EQ(is_bipartite(build_G_phi_p(phi, 1).graph).bipartite, b);
    }
    EXPECT_GT(balanced, 0);
    EXPECT_GT(unbalanced, 0);
}

TEST(GPhiP, RejectsBadInput) {
    EXPECT_THROW(build_G_phi_p(formula(3, {{1, 2, 3}}), 0), std::invalid_argument);
    CnfFormula phi = formula(3, {{1, 2, 3}});
    phi.rotation = {{0, 0, 1}};
    EXPECT_THROW(build_G_phi_p(phi, 1), std::invalid_argument);
    const auto h = build_H_phi(formula(3, {{1, 2, 3}}));
    EXPECT_THROW(deletion_set_from_assignment(h, bits(3, 7)), std::invalid_argument);
}

TEST(PetalParameter, Values) {
    EXPECT_EQ(petal_parameter(1, 1, 1), 280);
    EXPECT_EQ(petal_parameter(2, 1, 1), 560);
    EXPECT_EQ(petal_parameter(1, 1, 2), 21952000);
    EXPECT_EQ(petal_parameter(3, 1, 3), BigInt(840) * 840 * 840 * 840 * 840);
    EXPECT_EQ(petal_parameter(1, 2, 3), BigInt(280) * 280);
    EXPECT_THROW(petal_parameter(1, 0, 1), std::invalid_argument);
    EXPECT_THROW(petal_parameter(1, 3, 2), std::invalid_argument);
    EXPECT_THROW(petal_parameter(0, 1, 1), std::invalid_argument);
}

TEST(TriangleReduction, Shapes) {
    const auto single = triangle_reduction(Graph(2, std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(single.graph.order(), 3);
    EXPECT_EQ(single.graph.size(), 3);
    EXPECT_FALSE(is_triangle_free(single.graph));
    const auto c4 = triangle_reduction(oracle::cycle(4));
    EXPECT_EQ(c4.graph.order(), 8);
    EXPECT_EQ(c4.graph.size(), 12);
    EXPECT_EQ(c4.roles[4].kind, RoleKind::EdgeVertex);
    EXPECT_EQ(c4.roles[0].kind, RoleKind::Original);
    const auto edges = oracle::cycle(4).edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        EXPECT_TRUE(c4.graph.adjacent(edges[i].first, 4 + static_cast<Vertex>(i)));
        EXPECT_TRUE(c4.graph.adjacent(edges[i].second, 4 + static_cast<Vertex>(i)));
    }
}
