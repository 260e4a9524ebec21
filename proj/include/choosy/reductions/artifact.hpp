#pragma once

#include <optional>
#include <string>
#include <vector>

#include "choosy/graph.hpp"
#include "choosy/reductions/formula.hpp"

namespace choosy {

enum class RoleKind {
    // constraint graph
    Constraint,
    // H_phi
    VariableTrue,
    VariableFalse,
    ClauseTrue,
    ClauseFalse,
    EmbeddedConstraint,
    Dominating,
    Apex,
    // G_phi_p
    Variable,
    GadgetRoot,
    GadgetCore,
    Petal,
    Hexagon,
    EdgeGadget,
    // vertex cover reduction
    Original,
    EdgeVertex,
};

inline const char* to_string(RoleKind kind) {
    switch (kind) {
        case RoleKind::Constraint: return "constraint";
        case RoleKind::VariableTrue: return "variable-true";
        case RoleKind::VariableFalse: return "variable-false";
        case RoleKind::ClauseTrue: return "clause-true";
        case RoleKind::ClauseFalse: return "clause-false";
        case RoleKind::EmbeddedConstraint: return "embedded-P";
        case RoleKind::Dominating: return "dominating";
        case RoleKind::Apex: return "d0";
        case RoleKind::Variable: return "variable";
        case RoleKind::GadgetRoot: return "gadget-root";
        case RoleKind::GadgetCore: return "gadget-core";
        case RoleKind::Petal: return "petal";
        case RoleKind::Hexagon: return "hexagon";
        case RoleKind::EdgeGadget: return "edge-gadget";
        case RoleKind::Original: return "original";
        case RoleKind::EdgeVertex: return "edge-vertex";
    }
    return "?";
}

inline std::optional<RoleKind> role_kind_from_string(const std::string& text) {
    for (int k = 0; k <= static_cast<int>(RoleKind::EdgeVertex); ++k) {
        auto kind = static_cast<RoleKind>(k);
        if (text == to_string(kind)) return kind;
    }
    return std::nullopt;
}

/// Per-vertex annotation. Integer fields are 1-based and -1 when not applicable.
///   H_phi:   gadget = clause s, row, column, tag = "true"/"false" side, label = P name.
///   G_phi_p: gadget = forbidden/edge/clause gadget number, index = variable, petal or slot,
///            tag = "blue"/"red"/"plain" for edge gadgets, "c"/"w" on hexagons.
struct Role {
    RoleKind kind = RoleKind::Original;
    int gadget = -1;
    int row = -1;
    int column = -1;
    int index = -1;
    std::string label;
    std::string tag;

    friend bool operator==(const Role&, const Role&) = default;
};

/// Forbidden gadget: root-core edge plus petal 4-cycles through the core.
struct ForbiddenGadget {
    Vertex root = -1;
    Vertex core = -1;
    std::vector<std::array<Vertex, 3>> petals;  // core - a - b - c - core
};

struct ClauseGadget {
    int clause = 0;  // 0-based
    std::array<Vertex, 3> c{};
    std::array<Vertex, 3> w{};
};

struct EdgeGadget {
    int clause = 0;        // 0-based
    int position = 0;      // r in c_{j,r}, 0-based
    int literal = 0;       // signed DIMACS literal
    bool positive = true;
    Vertex x = -1;
    Vertex c = -1;
    VertexSet blue;        // includes the shared endpoints that are blue
    VertexSet red;
    VertexSet black;       // roots of forbidden gadgets
    int own_vertices = 0;  // vertices added to the host graph, endpoints excluded
};

/// Output of every construction: the graph plus one role per vertex and the structured
/// layout the solution constructors need.
struct ReductionArtifact {
    std::string kind;  // "constraint-graph", "h-phi", "g-phi-p", "triangle-reduction", "gadget"
    Graph graph;
    std::vector<Role> roles;
    std::optional<CnfFormula> formula;
    int p = 0;
    std::vector<ForbiddenGadget> forbidden;
    std::vector<ClauseGadget> clause_gadgets;
    std::vector<EdgeGadget> edge_gadgets;
};

}  // namespace choosy
