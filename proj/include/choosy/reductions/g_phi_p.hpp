#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "choosy/choosability.hpp"
#include "choosy/errors.hpp"
#include "choosy/exact.hpp"
#include "choosy/graph.hpp"
#include "choosy/reductions/artifact.hpp"
#include "choosy/reductions/formula.hpp"

namespace choosy {

namespace detail {

/// Incrementally grows an artifact: every vertex gets its role when it is created.
class GadgetBuilder {
public:
    explicit GadgetBuilder(std::string kind, int p) {
        if (p < 1) throw std::invalid_argument("gadget parameter p must be at least 1");
        art_.kind = std::move(kind);
        art_.p = p;
    }

    Vertex vertex(Role role) {
        art_.roles.push_back(std::move(role));
        return art_.graph.add_vertex();
    }

    void edge(Vertex u, Vertex v) { art_.graph.add_edge(u, v); }

    [[nodiscard]] int p() const { return art_.p; }
    [[nodiscard]] int order() const { return art_.graph.order(); }
    ReductionArtifact& artifact() { return art_; }

    /// Forbidden gadget hanging off `root`: a core joined to the root and p+1 petal 4-cycles
    /// through the core. Adds 3p+4 vertices.
    ForbiddenGadget forbidden(Vertex root) {
        const int id = static_cast<int>(art_.forbidden.size()) + 1;
        ForbiddenGadget f;
        f.root = root;
        f.core = vertex(Role{RoleKind::GadgetCore, id, -1, -1, -1, "", ""});
        edge(root, f.core);
        for (int petal = 1; petal <= art_.p + 1; ++petal) {
            std::array<Vertex, 3> ring{};
            for (auto& v : ring) v = vertex(Role{RoleKind::Petal, id, -1, -1, petal, "", ""});
            edge(f.core, ring[0]);
            edge(ring[0], ring[1]);
            edge(ring[1], ring[2]);
            edge(ring[2], f.core);
            f.petals.push_back(ring);
        }
        art_.forbidden.push_back(f);
        return f;
    }

    Vertex root(const std::string& tag = "") {
        const int id = static_cast<int>(art_.forbidden.size()) + 1;
        return vertex(Role{RoleKind::GadgetRoot, id, -1, -1, -1, "", tag});
    }

    /// Hexagon w1, c2, w2, c1, w3, c3 (cyclic) with the chord w1-c1 and a forbidden gadget at
    /// every w. Adds 9p+18 vertices.
    ClauseGadget clause(int j) {
        ClauseGadget cg;
        cg.clause = j;
        for (int r = 0; r < 3; ++r)
            cg.c[r] = vertex(Role{RoleKind::Hexagon, j + 1, -1, -1, r + 1, "c" + std::to_string(r + 1), "c"});
        for (int t = 0; t < 3; ++t)
            cg.w[t] = vertex(Role{RoleKind::Hexagon, j + 1, -1, -1, t + 1, "w" + std::to_string(t + 1), "w"});
        const std::array<Vertex, 6> ring{cg.w[0], cg.c[1], cg.w[1], cg.c[0], cg.w[2], cg.c[2]};
        for (int i = 0; i < 6; ++i) edge(ring[i], ring[(i + 1) % 6]);
        edge(cg.w[0], cg.c[0]);
        for (Vertex w : cg.w) forbidden(w);
        art_.clause_gadgets.push_back(cg);
        return cg;
    }

    /// Edge gadget joining variable vertex x to hexagon vertex c.
    EdgeGadget edge_gadget(Vertex x, Vertex c, bool positive, int clause, int position, int literal) {
        const int before = order();
        const int id = static_cast<int>(art_.edge_gadgets.size()) + 1;
        EdgeGadget eg;
        eg.clause = clause;
        eg.position = position;
        eg.literal = literal;
        eg.positive = positive;
        eg.x = x;
        eg.c = c;
        auto inner = [&](const std::string& tag) {
            return vertex(Role{RoleKind::EdgeGadget, id, -1, -1, -1, "", tag});
        };
        auto black = [&]() {
            const Vertex v = inner("plain");
            eg.black.push_back(v);
            return v;
        };
        if (positive) {
            const Vertex a = black(), b = black(), d = black(), e = black();
            const Vertex r1 = inner("red");
            const Vertex f = black(), g = black(), h = black();
            const Vertex b2 = inner("blue");
            const Vertex r2 = inner("red");
            const Vertex i = black(), jj = black(), k = black();
            for (auto [u, v] : std::initializer_list<Edge>{
                     {c, a},   {a, b},   {b, r1},  {r1, e},  {e, d},   {d, c},   {r1, f},
                     {f, g},   {g, b2},  {b2, r2}, {r2, i},  {r2, h},  {h, k},   {k, x},
                     {x, r2},  {r1, b2}, {c, r1},  {i, jj},  {jj, b2}, {g, h},   {i, r1}})
                edge(u, v);
            eg.blue = {c, b2, x};
            eg.red = {r1, r2};
        } else {
            const Vertex l1 = black(), l2 = black(), r2 = black(), r1 = black();
            for (auto [u, v] : std::initializer_list<Edge>{
                     {c, l1}, {l1, l2}, {l2, x}, {x, r2}, {r2, r1}, {r1, c}, {c, x}})
                edge(u, v);
            eg.blue = {c};
            eg.red = {x};
        }
        std::sort(eg.blue.begin(), eg.blue.end());
        std::sort(eg.red.begin(), eg.red.end());
        for (Vertex v : eg.black) forbidden(v);
        eg.own_vertices = order() - before;
        art_.edge_gadgets.push_back(eg);
        return eg;
    }

private:
    ReductionArtifact art_;
};

}  // namespace detail

/// Standalone forbidden gadget (fresh root): 3p+5 vertices, root is vertex 0.
inline ReductionArtifact build_forbidden_gadget(int p) {
    detail::GadgetBuilder b("forbidden-gadget", p);
    b.forbidden(b.root());
    return std::move(b.artifact());
}

/// Standalone clause gadget: 9p+18 vertices.
inline ReductionArtifact build_clause_gadget(int p) {
    detail::GadgetBuilder b("clause-gadget", p);
    b.clause(0);
    return std::move(b.artifact());
}

/// Standalone edge gadget including its endpoints: vertex 0 is x, vertex 1 is c.
inline ReductionArtifact build_edge_gadget(bool positive, int p) {
    detail::GadgetBuilder b(positive ? "positive-edge-gadget" : "negative-edge-gadget", p);
    const Vertex x = b.vertex(Role{RoleKind::Variable, -1, -1, -1, 1, "x1", ""});
    const Vertex c = b.vertex(Role{RoleKind::Hexagon, 1, -1, -1, 1, "c1", "c"});
    b.edge_gadget(x, c, positive, 0, 0, positive ? 1 : -1);
    return std::move(b.artifact());
}

/// Whether the sign pattern admits a 2-coloring: each clause's hexagon c-vertices share one
/// side, a positive occurrence puts x on that side and a negative one on the other.
inline bool is_sign_balanced(const CnfFormula& phi) {
    phi.validate();
    const int n = phi.num_vars, k = phi.num_clauses();
    // Parity union-find over variables 0..n-1 and clauses n..n+k-1.
    std::vector<int> parent(static_cast<std::size_t>(n + k)), parity(static_cast<std::size_t>(n + k), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int v) -> std::pair<int, int> {
        if (parent[v] == v) return {v, 0};
        auto [root, par] = self(self, parent[v]);
        parent[v] = root;
        parity[v] ^= par;
        return {root, parity[v]};
    };
    for (int j = 0; j < k; ++j) {
        for (int literal : phi.clauses[j]) {
            const int want = literal > 0 ? 0 : 1;
            auto [ra, pa] = find(find, std::abs(literal) - 1);
            auto [rb, pb] = find(find, n + j);
            if (ra == rb) {
                if ((pa ^ pb) != want) return false;
            } else {
                parent[ra] = rb;
                parity[ra] = pa ^ pb ^ want;
            }
        }
    }
    return true;
}

/// Planar-3-SAT reduction graph: variable vertices first, then per clause its hexagon
/// gadget followed by the three edge gadgets in rotation order.
inline ReductionArtifact build_G_phi_p(const CnfFormula& phi, int p) {
    phi.validate();
    detail::GadgetBuilder b("g-phi-p", p);
    for (int i = 0; i < phi.num_vars; ++i)
        b.vertex(Role{RoleKind::Variable, -1, -1, -1, i + 1, "x" + std::to_string(i + 1), ""});
    for (int j = 0; j < phi.num_clauses(); ++j) {
        const ClauseGadget cg = b.clause(j);
        for (int r = 0; r < 3; ++r) {
            const int literal = phi.clauses[j][phi.slot_at(j, r)];
            b.edge_gadget(std::abs(literal) - 1, cg.c[r], literal > 0, j, r, literal);
        }
    }
    ReductionArtifact art = std::move(b.artifact());
    art.formula = phi;
    return art;
}

/// Independent near-3 deletion set driven by a satisfying assignment: every forbidden-gadget
/// core, plus per edge gadget the colour class selected by the variable's value.
inline VertexSet deletion_set_from_assignment(const ReductionArtifact& art, const std::vector<bool>& tau) {
    if (art.kind != "g-phi-p" || !art.formula) throw std::invalid_argument("artifact is not a G_phi_p construction");
    const CnfFormula& phi = *art.formula;
    if (static_cast<int>(tau.size()) != phi.num_vars) throw std::invalid_argument("assignment length mismatch");
    if (!phi.satisfied_by(tau)) throw std::invalid_argument("assignment does not satisfy the formula");
    VertexSet a;
    for (const auto& f : art.forbidden) a.push_back(f.core);
    for (const auto& eg : art.edge_gadgets) {
        const bool value = tau[std::abs(eg.literal) - 1];
        const VertexSet& pick = eg.positive == value ? eg.blue : eg.red;
        a.insert(a.end(), pick.begin(), pick.end());
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (!is_near_3_decomposition(art.graph, a))
        throw InternalInconsistency("deletion_set_from_assignment produced an invalid set");
    return a;
}

using BigInt = boost::multiprecision::cpp_int;

/// Petal parameter (280k)^ceil((2 - eps)/eps) for eps = num/den in (0, 1].
inline BigInt petal_parameter(int k, std::int64_t num, std::int64_t den) {
    if (k < 1) throw std::invalid_argument("clause count must be positive");
    if (num <= 0 || den <= 0 || num > den) throw std::invalid_argument("epsilon must lie in (0, 1]");
    // (2 - num/den) / (num/den) = (2 den - num) / num
    const std::int64_t top = 2 * den - num;
    const auto exponent = static_cast<unsigned>((top + num - 1) / num);
    return boost::multiprecision::pow(BigInt(280) * k, exponent);
}

}  // namespace choosy
