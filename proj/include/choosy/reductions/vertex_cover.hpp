#pragma once

#include <string>
#include <vector>

#include "choosy/graph.hpp"
#include "choosy/reductions/artifact.hpp"

namespace choosy {

/// Adds one vertex per edge uv, adjacent to u and v. Original vertices keep their ids; the
/// vertex of the i-th edge (in sorted edge order) is n + i.
inline ReductionArtifact triangle_reduction(const Graph& g) {
    const auto edges = g.edges();
    const int n = g.order();
    std::vector<Edge> out = edges;
    ReductionArtifact art;
    art.kind = "triangle-reduction";
    for (Vertex v = 0; v < n; ++v) art.roles.push_back(Role{RoleKind::Original, -1, -1, -1, v + 1, "", ""});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Vertex t = n + static_cast<Vertex>(i);
        out.emplace_back(edges[i].first, t);
        out.emplace_back(edges[i].second, t);
        art.roles.push_back(Role{RoleKind::EdgeVertex, -1, -1, -1, static_cast<int>(i) + 1, "", ""});
    }
    art.graph = Graph(n + static_cast<int>(edges.size()), out);
    return art;
}

}  // namespace choosy
