#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "choosy/choosability.hpp"
#include "choosy/errors.hpp"
#include "choosy/exact.hpp"
#include "choosy/graph.hpp"
#include "choosy/reductions/artifact.hpp"
#include "choosy/reductions/constraint_graph.hpp"
#include "choosy/reductions/formula.hpp"

namespace choosy {

/// Vertex numbering of the satisfiability-to-near-3-choosability graph. Each clause s owns
/// an array of (n + 14k) paired rows by 17 columns plus a dominating row; the apex d0 is last.
/// All arguments are 0-based.
class HPhiLayout {
public:
    static constexpr int kColumns = 17;

    HPhiLayout(int num_vars, int num_clauses) : n_(num_vars), k_(num_clauses) {}

    [[nodiscard]] int vars() const noexcept { return n_; }
    [[nodiscard]] int clauses() const noexcept { return k_; }
    [[nodiscard]] int rows() const noexcept { return n_ + 14 * k_; }
    [[nodiscard]] int order() const noexcept { return k_ * rows() * 2 * kColumns + kColumns * k_ + 1; }

    [[nodiscard]] Vertex paired(int s, int row, int column, bool true_side) const {
        return (s * rows() + row) * 2 * kColumns + column * 2 + (true_side ? 0 : 1);
    }
    [[nodiscard]] Vertex dominating(int s, int column) const {
        return k_ * rows() * 2 * kColumns + s * kColumns + column;
    }
    [[nodiscard]] Vertex apex() const { return order() - 1; }

    [[nodiscard]] Vertex mate(Vertex v) const { return v ^ 1; }

    /// Row of clause-block row t (0-based, t < 14) inside block s.
    [[nodiscard]] int block_row(int s, int t) const { return n_ + 14 * s + t; }

    /// Vertex standing in for constraint vertex `p_vertex` (0..16) inside gadget s.
    [[nodiscard]] Vertex constraint_site(const CnfFormula& phi, int s, Vertex p_vertex) const {
        if (p_vertex < 3) {
            const int literal = phi.clauses.at(s)[p_vertex];
            return paired(s, std::abs(literal) - 1, p_vertex, literal > 0);
        }
        const int t = p_vertex - 3;  // w_{t+1}
        return paired(s, block_row(s, t), t + 3, true);
    }

private:
    int n_;
    int k_;
};

/// Builds the triangle-free, diameter-3 graph whose near-3-choosability encodes the
/// satisfiability of `phi`.
inline ReductionArtifact build_H_phi(const CnfFormula& phi) {
    phi.validate();
    if (phi.num_clauses() < 1) throw std::invalid_argument("formula needs at least one clause");
    const HPhiLayout lay(phi.num_vars, phi.num_clauses());
    const int n = phi.num_vars, k = phi.num_clauses(), cols = HPhiLayout::kColumns;

    std::vector<Edge> edges;
    // Rows: true(s, c) -- false(s', c') for (s, c) != (s', c').
    for (int row = 0; row < lay.rows(); ++row)
        for (int s = 0; s < k; ++s)
            for (int c = 0; c < cols; ++c)
                for (int s2 = 0; s2 < k; ++s2)
                    for (int c2 = 0; c2 < cols; ++c2)
                        if (s != s2 || c != c2)
                            edges.emplace_back(lay.paired(s, row, c, true), lay.paired(s2, row, c2, false));
    // Dominating rows and the apex.
    for (int s = 0; s < k; ++s) {
        for (int c = 0; c < cols; ++c) {
            const Vertex d = lay.dominating(s, c);
            for (int row = 0; row < lay.rows(); ++row) {
                edges.emplace_back(lay.paired(s, row, c, true), d);
                edges.emplace_back(lay.paired(s, row, c, false), d);
            }
            edges.emplace_back(d, lay.apex());
        }
    }
    // Constraint-graph copies; an edge may coincide with a row edge when a clause holds
    // both polarities of one variable.
    for (int s = 0; s < k; ++s)
        for (auto [a, b] : constraint_edges())
            edges.emplace_back(lay.constraint_site(phi, s, a), lay.constraint_site(phi, s, b));
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    ReductionArtifact art;
    art.kind = "h-phi";
    art.graph = Graph(lay.order(), edges);
    art.formula = phi;
    art.roles.resize(static_cast<std::size_t>(lay.order()));
    for (int s = 0; s < k; ++s) {
        for (int row = 0; row < lay.rows(); ++row) {
            for (int c = 0; c < cols; ++c) {
                for (bool side : {true, false}) {
                    Role r;
                    if (row < n) r.kind = side ? RoleKind::VariableTrue : RoleKind::VariableFalse;
                    else r.kind = side ? RoleKind::ClauseTrue : RoleKind::ClauseFalse;
                    r.gadget = s + 1;
                    r.row = row + 1;
                    r.column = c + 1;
                    r.tag = side ? "true" : "false";
                    art.roles[lay.paired(s, row, c, side)] = r;
                }
            }
        }
        for (int c = 0; c < cols; ++c) {
            Role r;
            r.kind = RoleKind::Dominating;
            r.gadget = s + 1;
            r.column = c + 1;
            art.roles[lay.dominating(s, c)] = r;
        }
        for (Vertex pv = 0; pv < 17; ++pv) {
            Role& r = art.roles[lay.constraint_site(phi, s, pv)];
            r.kind = RoleKind::EmbeddedConstraint;
            r.index = pv + 1;
            r.label = kConstraintNames[pv];
        }
    }
    art.roles[lay.apex()] = Role{RoleKind::Apex, -1, -1, -1, -1, "d0", ""};
    return art;
}

inline HPhiLayout layout_of(const ReductionArtifact& art) {
    if (art.kind != "h-phi" || !art.formula) throw std::invalid_argument("artifact is not an H_phi construction");
    return HPhiLayout(art.formula->num_vars, art.formula->num_clauses());
}

struct FourColoring {
    std::vector<int> colors;  // per vertex, 1..4
    std::string rule;         // "direct-rule" or "row-search"
};

namespace detail {

struct RowColors {
    int y = 1;
    int z = 2;
};

inline std::vector<RowColors> recipe_row_colors(const ReductionArtifact& art) {
    const auto lay = layout_of(art);
    const auto& phi = *art.formula;
    std::vector<RowColors> rows(static_cast<std::size_t>(lay.rows()), RowColors{1, 2});
    const VertexSet contact = constraint_single_contact_set();
    const Graph p = constraint_graph_P().graph;
    for (int s = 0; s < lay.clauses(); ++s) {
        for (int t = 0; t < 14; ++t) {
            const Vertex pv = 3 + t;
            RowColors rc{3, 2};
            if (std::find(contact.begin(), contact.end(), pv) != contact.end()) {
                Vertex u = 0;
                for (Vertex cand : {0, 1, 2})
                    if (p.adjacent(pv, cand)) u = cand;
                const int literal = phi.clauses[s][u];
                const int contact_color = literal > 0 ? 1 : 2;  // variable rows: Y=1, Z=2
                rc = contact_color == 2 ? RowColors{1, 2} : RowColors{2, 1};
            }
            rows[lay.block_row(s, t)] = rc;
        }
    }
    return rows;
}

inline std::vector<int> expand_row_colors(const ReductionArtifact& art, const std::vector<RowColors>& rows) {
    const auto lay = layout_of(art);
    std::vector<int> colors(static_cast<std::size_t>(lay.order()), 0);
    for (int s = 0; s < lay.clauses(); ++s) {
        for (int row = 0; row < lay.rows(); ++row) {
            for (int c = 0; c < HPhiLayout::kColumns; ++c) {
                colors[lay.paired(s, row, c, true)] = rows[row].y;
                colors[lay.paired(s, row, c, false)] = rows[row].z;
            }
        }
        for (int c = 0; c < HPhiLayout::kColumns; ++c) colors[lay.dominating(s, c)] = 4;
    }
    colors[lay.apex()] = 1;
    return colors;
}

}  // namespace detail

/// Proper 4-coloring in which every row side is monochromatic from {1,2,3}, dominating rows
/// use color 4 and d0 uses color 1. The direct per-row rule is tried first; when it is not
/// proper, a backtracking search over per-row color pairs (seeded with that rule) is used.
inline FourColoring H_phi_four_coloring(const ReductionArtifact& art) {
    const auto lay = layout_of(art);
    const Graph& g = art.graph;
    const auto seed = detail::recipe_row_colors(art);
    if (auto colors = detail::expand_row_colors(art, seed); is_proper_coloring(g, colors))
        return {std::move(colors), "direct-rule"};

    // Constraints between rows come only from edges joining different rows.
    struct RowEdge {
        int row_a, row_b;
        bool side_a, side_b;
    };
    std::vector<RowEdge> links;
    auto locate = [&](Vertex v, int& row, bool& side) {
        const auto& r = art.roles[v];
        row = r.row - 1;
        side = r.tag == "true";
        return r.row > 0;
    };
    for (auto [u, v] : g.edges()) {
        int ra, rb;
        bool sa, sb;
        if (!locate(u, ra, sa) || !locate(v, rb, sb) || ra == rb) continue;
        links.push_back({ra, rb, sa, sb});
    }
    std::sort(links.begin(), links.end(), [](const RowEdge& a, const RowEdge& b) {
        return std::max(a.row_a, a.row_b) < std::max(b.row_a, b.row_b);
    });
    links.erase(std::unique(links.begin(), links.end(),
                            [](const RowEdge& a, const RowEdge& b) {
                                return a.row_a == b.row_a && a.row_b == b.row_b && a.side_a == b.side_a &&
                                       a.side_b == b.side_b;
                            }),
                links.end());

    const int rows = lay.rows();
    std::vector<std::vector<detail::RowColors>> options(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        options[r].push_back(seed[r]);
        for (int y = 1; y <= 3; ++y)
            for (int z = 1; z <= 3; ++z)
                if (y != z && !(y == seed[r].y && z == seed[r].z)) options[r].push_back({y, z});
    }
    std::vector<detail::RowColors> chosen(static_cast<std::size_t>(rows));
    std::vector<std::size_t> next(static_cast<std::size_t>(rows), 0);
    auto consistent = [&](int row) {
        for (const auto& e : links) {
            const int hi = std::max(e.row_a, e.row_b);
            if (hi != row) continue;
            const int ca = e.side_a ? chosen[e.row_a].y : chosen[e.row_a].z;
            const int cb = e.side_b ? chosen[e.row_b].y : chosen[e.row_b].z;
            if (ca == cb) return false;
        }
        return true;
    };
    int row = 0;
    while (row >= 0 && row < rows) {
        bool placed = false;
        while (next[row] < options[row].size()) {
            chosen[row] = options[row][next[row]++];
            if (consistent(row)) {
                placed = true;
                break;
            }
        }
        if (placed) {
            ++row;
        } else {
            next[row] = 0;
            --row;
        }
    }
    if (row < 0) throw InternalInconsistency("no row-uniform 4-coloring exists");
    auto colors = detail::expand_row_colors(art, chosen);
    if (!is_proper_coloring(g, colors)) throw InternalInconsistency("row-uniform 4-coloring failed verification");
    return {std::move(colors), "row-search"};
}

/// Near-3-choosable decomposition built from a satisfying assignment: d0 in A, each variable
/// row puts the side matching tau in B, and each clause block follows the independent
/// extension of that clause's false-literal sites.
inline Decomposition decomposition_from_assignment(const ReductionArtifact& art, const std::vector<bool>& tau) {
    const auto lay = layout_of(art);
    const auto& phi = *art.formula;
    if (static_cast<int>(tau.size()) != phi.num_vars) throw std::invalid_argument("assignment length mismatch");
    if (!phi.satisfied_by(tau)) throw std::invalid_argument("assignment does not satisfy the formula");

    // in_b_true[row]: whether the true side of the row goes to B.
    std::vector<char> true_side_in_b(static_cast<std::size_t>(lay.rows()), 0);
    for (int i = 0; i < phi.num_vars; ++i) true_side_in_b[i] = tau[i] ? 1 : 0;
    for (int s = 0; s < lay.clauses(); ++s) {
        unsigned false_mask = 0;
        for (int r = 0; r < 3; ++r)
            if (!phi.literal_true(phi.clauses[s][r], tau)) false_mask |= 1u << r;
        const VertexSet ext = constraint_extension(false_mask);
        for (int t = 0; t < 14; ++t) {
            const bool w_in_a = std::binary_search(ext.begin(), ext.end(), 3 + t);
            true_side_in_b[lay.block_row(s, t)] = w_in_a ? 0 : 1;
        }
    }
    Decomposition d;
    for (int s = 0; s < lay.clauses(); ++s)
        for (int row = 0; row < lay.rows(); ++row)
            for (int c = 0; c < HPhiLayout::kColumns; ++c)
                for (bool side : {true, false}) {
                    const bool in_b = side == static_cast<bool>(true_side_in_b[row]);
                    (in_b ? d.rest : d.independent).push_back(lay.paired(s, row, c, side));
                }
    for (int s = 0; s < lay.clauses(); ++s)
        for (int c = 0; c < HPhiLayout::kColumns; ++c) d.rest.push_back(lay.dominating(s, c));
    d.independent.push_back(lay.apex());
    std::sort(d.independent.begin(), d.independent.end());
    std::sort(d.rest.begin(), d.rest.end());
    if (!is_near_3_decomposition(art.graph, d.independent))
        throw InternalInconsistency("decomposition_from_assignment produced an invalid decomposition");
    return d;
}

}  // namespace choosy
