#pragma once

// Brute-force reference implementations used only by the tests. None of them call the
// algorithms they are compared against, except where noted.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "choosy/choosability.hpp"
#include "choosy/graph.hpp"

namespace oracle {

using choosy::Edge;
using choosy::Graph;
using choosy::Vertex;
using choosy::VertexSet;

/// All labelled graphs on n vertices; graph number `mask` contains the i-th pair (in
/// lexicographic order) when bit i of `mask` is set.
inline void for_each_graph(int n, const std::function<void(const Graph&, std::uint32_t)>& visit) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        visit(Graph(n, edges), mask);
    }
}

inline bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

/// Every 2-colouring tried.
inline bool bipartite(const Graph& g) {
    const int n = g.order();
    for (std::uint32_t colour = 0; colour < (std::uint32_t{1} << n); ++colour) {
        bool ok = true;
        for (auto [u, v] : g.edges()) ok = ok && ((colour >> u & 1) != (colour >> v & 1));
        if (ok) return true;
    }
    return false;
}

/// Length of the shortest cycle, by extending every simple path from its smallest vertex.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = n + 1;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex, Vertex, Vertex, int)> walk = [&](Vertex start, Vertex prev, Vertex cur, int len) {
        for (Vertex w : g.neighbors(cur)) {
            if (w == start && w != prev && len >= 2) best = std::min(best, len + 1);
            if (w <= start || used[w] || len + 1 >= best) continue;
            used[w] = 1;
            walk(start, cur, w, len + 1);
            used[w] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        used[s] = 1;
        walk(s, -1, s, 0);
        used[s] = 0;
    }
    if (best == n + 1) return std::nullopt;
    return best;
}

/// Relabels a small graph (n <= 8) to the lexicographically smallest adjacency pattern over
/// all vertex permutations.
inline std::uint64_t canonical_form(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    const auto edges = g.edges();
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            const int index = a * n - a * (a + 1) / 2 + (b - a - 1);
            code |= std::uint64_t{1} << index;
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best | (static_cast<std::uint64_t>(n) << 58);
}

/// Exhaustive list-assignment 2-choosability with results memoised per isomorphism class.
class ChoosabilityMemo {
public:
    bool two_choosable(const Graph& g) {
        const auto labelled = labelled_key(g);
        if (auto it = labelled_.find(labelled); it != labelled_.end()) return it->second;
        const auto key = canonical_form(g);
        auto it = by_class_.find(key);
        if (it == by_class_.end())
            it = by_class_.emplace(key, choosy::is_k_choosable_exhaustive(g, 2, {8, 2'000'000'000}).choosable).first;
        labelled_.emplace(labelled, it->second);
        return it->second;
    }

private:
    static std::uint64_t labelled_key(const Graph& g) {
        const int n = g.order();
        std::uint64_t code = 0;
        for (auto [u, v] : g.edges()) code |= std::uint64_t{1} << (u * n - u * (u + 1) / 2 + (v - u - 1));
        return code | (static_cast<std::uint64_t>(n) << 58);
    }

    std::map<std::uint64_t, bool> labelled_;
    std::map<std::uint64_t, bool> by_class_;
};

/// Smallest subsets first, lexicographic within a size; returns the first accepted subset.
inline std::optional<VertexSet> first_subset(int n, const std::function<bool(const VertexSet&)>& accept) {
    for (int size = 0; size <= n; ++size) {
        VertexSet pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (accept(pick)) return pick;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

inline bool independent(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool covers(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (std::find(s.begin(), s.end(), u) == s.end() && std::find(s.begin(), s.end(), v) == s.end()) return false;
    return true;
}

inline Graph remove(const Graph& g, const VertexSet& s) { return g.without(s).first; }

/// Minimum vertex cover by subset enumeration.
inline VertexSet min_vertex_cover(const Graph& g) {
    return *first_subset(g.order(), [&](const VertexSet& s) { return covers(g, s); });
}

/// Minimum 2-choosable deletion set by subset enumeration; `is_ok` decides the remainder.
inline VertexSet min_deletion(const Graph& g, const std::function<bool(const Graph&)>& is_ok) {
    return *first_subset(g.order(), [&](const VertexSet& s) { return is_ok(remove(g, s)); });
}

/// Minimum independent deletion set, or nullopt when none exists.
inline std::optional<VertexSet> min_independent_deletion(const Graph& g,
                                                         const std::function<bool(const Graph&)>& is_ok) {
    return first_subset(g.order(), [&](const VertexSet& s) { return independent(g, s) && is_ok(remove(g, s)); });
}

/// Random graph from raw generator output, for test corpora.
inline Graph random_graph(std::mt19937_64& rng, int n, double prob) {
    std::vector<Edge> edges;
    const auto threshold = static_cast<std::uint64_t>(prob * 18446744073709551615.0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() < threshold) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Random spanning forest plus `extra` further random edges: sparse graphs whose cores are
/// small, so both verdicts of the 2-choosability test occur often.
inline Graph random_sparse(std::mt19937_64& rng, int n, int extra, int tree_edges) {
    std::vector<Edge> edges;
    auto has = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end();
    };
    for (Vertex v = 1; v < n && static_cast<int>(edges.size()) < tree_edges; ++v) {
        const auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v));
        edges.emplace_back(u, v);
    }
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (int added = 0; added < extra && static_cast<std::int64_t>(edges.size()) < max_edges;) {
        auto a = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        auto b = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        if (a == b || has(a, b)) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
        ++added;
    }
    return Graph(n, edges);
}

/// Cycle C_n on vertices 0..n-1.
inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

/// theta graph: hubs 0 and 1, internally disjoint paths of the given lengths.
inline Graph theta(std::initializer_list<int> lengths) {
    Graph g(2);
    for (int len : lengths) {
        Vertex prev = 0;
        for (int step = 1; step < len; ++step) {
            Vertex v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

}  // namespace oracle
