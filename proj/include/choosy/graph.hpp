#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "choosy/errors.hpp"

namespace choosy {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (auto [u, v] : edges) {
            check_pair(u, v);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw std::invalid_argument("duplicate edge");
        }
        edge_count_ = static_cast<int>(edges.size());
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] int order() const noexcept { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const noexcept { return edge_count_; }

    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        const auto& list = adj_.at(u);
        return std::binary_search(list.begin(), list.end(), v);
    }

    void add_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        auto& lu = adj_[u];
        auto it = std::lower_bound(lu.begin(), lu.end(), v);
        if (it != lu.end() && *it == v) throw std::invalid_argument("duplicate edge");
        lu.insert(it, v);
        auto& lv = adj_[v];
        lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
        ++edge_count_;
    }

    Vertex add_vertex() {
        adj_.emplace_back();
        if (!labels_.empty()) labels_.emplace_back();
        return order() - 1;
    }

    /// Edges as (u, v) with u < v, sorted ascending.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by `vertices`; new id i corresponds to vertices[i].
    [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const {
        std::vector<int> index(adj_.size(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
        Graph h(static_cast<int>(vertices.size()));
        int m = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (Vertex w : adj_[vertices[i]]) {
                if (index[w] >= 0) h.adj_[i].push_back(index[w]);
            }
            std::sort(h.adj_[i].begin(), h.adj_[i].end());
            m += static_cast<int>(h.adj_[i].size());
        }
        h.edge_count_ = m / 2;
        if (!labels_.empty()) {
            h.labels_.reserve(vertices.size());
            for (Vertex v : vertices) h.labels_.push_back(labels_[v]);
        }
        return h;
    }

    /// Graph with `removed` deleted; remaining vertices keep their relative order.
    [[nodiscard]] std::pair<Graph, VertexSet> without(std::span<const Vertex> removed) const {
        std::vector<char> gone(adj_.size(), 0);
        for (Vertex v : removed) gone.at(v) = 1;
        VertexSet kept;
        for (Vertex v = 0; v < order(); ++v)
            if (!gone[v]) kept.push_back(v);
        return {induced(kept), kept};
    }

    [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_.at(v); }
    void set_label(Vertex v, std::string text) {
        if (labels_.empty()) labels_.resize(adj_.size());
        labels_.at(v) = std::move(text);
    }
    [[nodiscard]] std::optional<Vertex> find_label(const std::string& text) const {
        auto it = std::find(labels_.begin(), labels_.end(), text);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<Vertex>(it - labels_.begin());
    }

    /// Structural equality; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }
    void check_pair(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

/// Multigraph with per-vertex counts and provenance lists. Parallel edges are allowed,
/// self-loops are not. Neighbor lists are sorted and repeat a neighbor once per parallel edge.
class CountedMultiGraph {
public:
    CountedMultiGraph() = default;

    /// Unit counts; provenance(v) = {v}.
    static CountedMultiGraph lift(const Graph& g) {
        CountedMultiGraph h;
        for (Vertex v = 0; v < g.order(); ++v) h.add_vertex(1, {v});
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        return h;
    }

    Vertex add_vertex(int count, VertexSet provenance) {
        if (count < 1) throw std::invalid_argument("vertex count must be positive");
        if (static_cast<int>(provenance.size()) != count)
            throw std::invalid_argument("provenance length must equal count");
        adj_.emplace_back();
        count_.push_back(count);
        provenance_.push_back(std::move(provenance));
        return order() - 1;
    }

    void add_edge(Vertex u, Vertex v) {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loop in counted multigraph");
        auto& lu = adj_[u];
        lu.insert(std::upper_bound(lu.begin(), lu.end(), v), v);
        auto& lv = adj_[v];
        lv.insert(std::upper_bound(lv.begin(), lv.end(), u), u);
        ++edge_count_;
    }

    [[nodiscard]] int order() const noexcept { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const noexcept { return edge_count_; }
    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    [[nodiscard]] int count(Vertex v) const { return count_.at(v); }
    [[nodiscard]] const VertexSet& provenance(Vertex v) const { return provenance_.at(v); }

    [[nodiscard]] int multiplicity(Vertex u, Vertex v) const {
        auto [lo, hi] = std::equal_range(adj_.at(u).begin(), adj_.at(u).end(), v);
        return static_cast<int>(hi - lo);
    }

    [[nodiscard]] long long total_count() const {
        long long s = 0;
        for (int c : count_) s += c;
        return s;
    }

    /// Edges with multiplicity, (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Sub-multigraph on `vertices` (in that order), carrying counts and provenance.
    [[nodiscard]] CountedMultiGraph induced(std::span<const Vertex> vertices) const {
        std::vector<int> index(adj_.size(), -1);
        CountedMultiGraph h;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            index.at(vertices[i]) = static_cast<int>(i);
            h.add_vertex(count_[vertices[i]], provenance_[vertices[i]]);
        }
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (Vertex w : adj_[vertices[i]])
                if (index[w] >= 0) h.adj_[i].push_back(index[w]);
            std::sort(h.adj_[i].begin(), h.adj_[i].end());
            h.edge_count_ += static_cast<int>(h.adj_[i].size());
        }
        h.edge_count_ /= 2;
        return h;
    }

    friend bool operator==(const CountedMultiGraph& a, const CountedMultiGraph& b) {
        return a.adj_ == b.adj_ && a.count_ == b.count_ && a.provenance_ == b.provenance_;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> count_;
    std::vector<VertexSet> provenance_;
    int edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Structural queries. Templated ones accept any type with order() and
// neighbors(v) returning a sorted neighbor list.

template <class G>
std::vector<VertexSet> connected_components(const G& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// BFS distances from `source`; -1 for unreachable vertices.
template <class G>
std::vector<int> bfs_distances(const G& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

struct BipartiteVerdict {
    bool bipartite = false;
    std::vector<int> sides;   // 0/1 per vertex when bipartite
    VertexSet odd_cycle;      // closing edge back to the first vertex is implied
};

inline BipartiteVerdict is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
        depth(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    // Same BFS layer: climb both branches to their meeting point.
                    VertexSet left{u}, right{w};
                    Vertex a = u, b = w;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    VertexSet cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    return {false, {}, std::move(cycle)};
                }
            }
        }
    }
    return {true, std::move(side), {}};
}

inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            auto it_u = std::upper_bound(nu.begin(), nu.end(), v);
            auto it_v = std::upper_bound(nv.begin(), nv.end(), v);
            while (it_u != nu.end() && it_v != nv.end()) {
                if (*it_u < *it_v) ++it_u;
                else if (*it_v < *it_u) ++it_v;
                else return std::array<Vertex, 3>{u, v, *it_u};
            }
        }
    }
    return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

/// Maximum shortest-path distance, or nullopt when disconnected. The empty graph has diameter 0.
inline std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

/// Length of a shortest cycle, or nullopt for forests. Parallel edges form 2-cycles.
template <class G>
std::optional<int> girth(const G& g) {
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        const auto& nu = g.neighbors(u);
        if (std::adjacent_find(nu.begin(), nu.end()) != nu.end()) return 2;
    }
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (Vertex r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent[r] = -1;
        std::vector<Vertex> queue{r};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (best >= 0 && 2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace detail {

template <class G>
bool extend_cycle(const G& g, VertexSet& path, std::vector<char>& used, const std::vector<int>& dist,
                  int length) {
    const Vertex s = path.front();
    const Vertex u = path.back();
    const int placed = static_cast<int>(path.size());
    if (placed == length) {
        const auto& nu = g.neighbors(u);
        return std::binary_search(nu.begin(), nu.end(), s);
    }
    for (Vertex w : g.neighbors(u)) {
        if (w <= s || used[w] || dist[w] < 0) continue;
        // w sits at position `placed`; it still needs length - placed edges to return to s.
        if (dist[w] > length - placed) continue;
        used[w] = 1;
        path.push_back(w);
        if (extend_cycle(g, path, used, dist, length)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

}  // namespace detail

/// Shortest cycle as a vertex sequence (closing edge implied). Among shortest cycles the
/// lexicographically smallest sequence is returned; it starts at its smallest vertex.
template <class G>
std::optional<VertexSet> shortest_cycle(const G& g) {
    const auto len = girth(g);
    if (!len) return std::nullopt;
    const int n = g.order();
    if (*len == 2) {
        for (Vertex u = 0; u < n; ++u) {
            const auto& nu = g.neighbors(u);
            auto it = std::adjacent_find(nu.begin(), nu.end());
            if (it != nu.end()) return VertexSet{u, *it};
        }
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
        // Distances from s inside the subgraph on vertices >= s.
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        dist[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (w >= s && dist[w] < 0) {
                    dist[w] = dist[queue[head]] + 1;
                    queue.push_back(w);
                }
            }
        }
        VertexSet path{s};
        used[s] = 1;
        if (detail::extend_cycle(g, path, used, dist, *len)) return path;
        used[s] = 0;
    }
    throw std::logic_error("girth found but no cycle reconstructed");
}

/// True when `cycle` is a cycle of g (consecutive vertices adjacent, distinct, closing edge).
template <class G>
bool is_cycle_of(const G& g, const VertexSet& cycle) {
    const std::size_t len = cycle.size();
    if (len < 2) return false;
    VertexSet sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto count_edges = [&](Vertex a, Vertex b) {
        const auto& na = g.neighbors(a);
        auto [lo, hi] = std::equal_range(na.begin(), na.end(), b);
        return hi - lo;
    };
    if (len == 2) return count_edges(cycle[0], cycle[1]) >= 2;
    for (std::size_t i = 0; i < len; ++i)
        if (count_edges(cycle[i], cycle[(i + 1) % len]) < 1) return false;
    return true;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
    return true;
}

/// Proper k-coloring with colors 1..k via deterministic backtracking (ascending vertex ids,
/// ascending colors), or nullopt. Throws BudgetExceeded past `max_nodes` expansions.
inline std::optional<std::vector<int>> find_proper_coloring(const Graph& g, int k,
                                                            std::uint64_t max_nodes = 50'000'000) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    Budget budget(max_nodes, "proper coloring");
    // Iterative backtracking so large structured inputs do not exhaust the stack.
    Vertex v = 0;
    while (v >= 0 && v < n) {
        budget.tick();
        int c = color[v] + 1;
        for (; c <= k; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (w < v && color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        if (c <= k) {
            color[v] = c;
            ++v;
        } else {
            color[v] = 0;
            --v;
        }
    }
    if (v < 0) return std::nullopt;
    return color;
}

}  // namespace choosy
