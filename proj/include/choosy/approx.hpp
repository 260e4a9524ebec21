#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "choosy/choosability.hpp"
#include "choosy/errors.hpp"
#include "choosy/graph.hpp"

namespace choosy {

namespace detail {

/// Mutable working copy used while preprocessing: vertices are only ever killed or appended.
struct WorkGraph {
    std::vector<std::vector<Vertex>> adj;  // multiset neighbor lists, unsorted
    std::vector<int> count;
    std::vector<VertexSet> provenance;
    std::vector<char> alive;

    explicit WorkGraph(const CountedMultiGraph& h) {
        for (Vertex v = 0; v < h.order(); ++v) {
            adj.push_back(h.neighbors(v));
            count.push_back(h.count(v));
            provenance.push_back(h.provenance(v));
            alive.push_back(1);
        }
    }

    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }

    void erase_one(Vertex from, Vertex target) {
        auto& list = adj[from];
        list.erase(std::find(list.begin(), list.end(), target));
    }

    void kill(Vertex v) {
        for (Vertex w : adj[v])
            if (w != v) erase_one(w, v);
        adj[v].clear();
        alive[v] = 0;
    }

    Vertex append(int c, VertexSet prov) {
        adj.emplace_back();
        count.push_back(c);
        provenance.push_back(std::move(prov));
        alive.push_back(1);
        return static_cast<Vertex>(adj.size()) - 1;
    }

    void link(Vertex u, Vertex v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    /// Neighbor of degree-2 vertex `cur` that is not `prev`.
    [[nodiscard]] Vertex other(Vertex cur, Vertex prev) const {
        return adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    }

    [[nodiscard]] CountedMultiGraph compact() const {
        CountedMultiGraph out;
        std::vector<int> index(adj.size(), -1);
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (!alive[v]) continue;
            index[v] = out.add_vertex(count[v], provenance[v]);
        }
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (!alive[v]) continue;
            for (Vertex w : adj[v])
                if (static_cast<std::size_t>(w) > v) out.add_edge(index[v], index[w]);
        }
        return out;
    }
};

}  // namespace detail

/// Removes degree-1 vertices, then replaces every maximal path of at least two degree-2
/// vertices by one vertex carrying the summed count and concatenated provenance. A cycle
/// component keeps its smallest vertex and contracts the rest, leaving a parallel pair.
/// Surviving vertices keep their relative order; contracted vertices are appended.
inline CountedMultiGraph preprocess(const CountedMultiGraph& input) {
    detail::WorkGraph w(input);
    const int n = input.order();

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (w.degree(v) == 1) leaves.push(v);
    while (!leaves.empty()) {
        Vertex v = leaves.top();
        leaves.pop();
        if (!w.alive[v] || w.degree(v) != 1) continue;
        Vertex u = w.adj[v][0];
        w.kill(v);
        if (w.degree(u) == 1) leaves.push(u);
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (!w.alive[v] || seen[v] || w.degree(v) != 2) continue;
        seen[v] = 1;
        const Vertex a = w.adj[v][0], b = w.adj[v][1];
        if (a == b) continue;  // parallel pair at v: nothing of length >= 2 to contract

        // Extend from v towards a, then towards b.
        VertexSet left, right;
        Vertex prev = v, cur = a;
        bool cycle = false;
        while (w.degree(cur) == 2) {
            if (cur == v) {
                cycle = true;
                break;
            }
            left.push_back(cur);
            Vertex next = w.other(cur, prev);
            prev = cur;
            cur = next;
        }
        if (cycle) {
            // v is the smallest vertex of this cycle component; contract all the others,
            // walking from v's smaller neighbour.
            VertexSet path = left;
            if (path.back() < path.front()) std::reverse(path.begin(), path.end());
            int total = 0;
            VertexSet prov;
            for (Vertex u : path) {
                seen[u] = 1;
                total += w.count[u];
                prov.insert(prov.end(), w.provenance[u].begin(), w.provenance[u].end());
            }
            for (Vertex u : path) w.kill(u);
            Vertex s = w.append(total, std::move(prov));
            w.link(v, s);
            w.link(v, s);
            continue;
        }
        const Vertex end_a = cur;  // external neighbour on the a side
        prev = v;
        cur = b;
        while (w.degree(cur) == 2) {
            right.push_back(cur);
            Vertex next = w.other(cur, prev);
            prev = cur;
            cur = next;
        }
        const Vertex end_b = cur;

        VertexSet chain(left.rbegin(), left.rend());
        chain.push_back(v);
        chain.insert(chain.end(), right.begin(), right.end());
        for (Vertex u : chain) seen[u] = 1;
        if (chain.size() < 2) continue;
        Vertex ext_first = end_a, ext_last = end_b;
        if (chain.back() < chain.front()) {
            std::reverse(chain.begin(), chain.end());
            std::swap(ext_first, ext_last);
        }
        int total = 0;
        VertexSet prov;
        for (Vertex u : chain) {
            total += w.count[u];
            prov.insert(prov.end(), w.provenance[u].begin(), w.provenance[u].end());
        }
        for (Vertex u : chain) w.kill(u);
        Vertex s = w.append(total, std::move(prov));
        w.link(ext_first, s);
        w.link(s, ext_last);
    }
    return w.compact();
}

enum class CPrimeKind { K1Counted, ParallelPairEvenSum, K23OneOddCount, NotInCPrime };

inline const char* to_string(CPrimeKind kind) {
    switch (kind) {
        case CPrimeKind::K1Counted: return "K1-counted";
        case CPrimeKind::ParallelPairEvenSum: return "parallel-pair-even-sum";
        case CPrimeKind::K23OneOddCount: return "K23-one-odd-count";
        case CPrimeKind::NotInCPrime: return "not-in-C'";
    }
    return "?";
}

struct CPrimeVerdict {
    CPrimeKind kind = CPrimeKind::NotInCPrime;
    VertexSet component;
};

/// Classifies a connected, preprocessed component. Throws on a degree-1 vertex.
inline CPrimeVerdict classify_c_prime(const CountedMultiGraph& h) {
    VertexSet all(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i) all[i] = i;
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) == 1) throw std::invalid_argument("classify_c_prime: degree-1 vertex present");
    if (h.order() == 1) return {CPrimeKind::K1Counted, all};
    if (h.order() == 2) {
        if (h.multiplicity(0, 1) == 2 && h.degree(0) == 2 && h.degree(1) == 2 &&
            (h.count(0) + h.count(1)) % 2 == 0)
            return {CPrimeKind::ParallelPairEvenSum, all};
        return {CPrimeKind::NotInCPrime, all};
    }
    if (h.order() == 5 && h.size() == 6) {
        VertexSet hubs, spokes;
        for (Vertex v = 0; v < 5; ++v) {
            if (h.degree(v) == 3) hubs.push_back(v);
            else if (h.degree(v) == 2) spokes.push_back(v);
        }
        if (hubs.size() != 2 || spokes.size() != 3) return {CPrimeKind::NotInCPrime, all};
        for (Vertex s : spokes)
            if (h.multiplicity(s, hubs[0]) != 1 || h.multiplicity(s, hubs[1]) != 1)
                return {CPrimeKind::NotInCPrime, all};
        if (h.count(hubs[0]) != 1 || h.count(hubs[1]) != 1) return {CPrimeKind::NotInCPrime, all};
        int heavy = 0;
        for (Vertex s : spokes) {
            if (h.count(s) > 1) {
                ++heavy;
                if (h.count(s) % 2 == 0) return {CPrimeKind::NotInCPrime, all};
            }
        }
        if (heavy <= 1) return {CPrimeKind::K23OneOddCount, all};
    }
    return {CPrimeKind::NotInCPrime, all};
}

/// Drops every component that classifies into C'.
inline CountedMultiGraph remove_c_prime_components(const CountedMultiGraph& h) {
    VertexSet keep;
    for (const auto& comp : connected_components(h)) {
        if (classify_c_prime(h.induced(comp)).kind == CPrimeKind::NotInCPrime)
            keep.insert(keep.end(), comp.begin(), comp.end());
    }
    std::sort(keep.begin(), keep.end());
    return h.induced(keep);
}

/// 2-choosability decided by preprocessing and the C' shapes, per component.
inline bool is_2_choosable_via_preprocessing(const Graph& g) {
    const CountedMultiGraph h = preprocess(CountedMultiGraph::lift(g));
    for (const auto& comp : connected_components(h))
        if (classify_c_prime(h.induced(comp)).kind == CPrimeKind::NotInCPrime) return false;
    return true;
}

struct ApproxDeletion {
    VertexSet set;                        // ascending vertices of g
    std::vector<VertexSet> cycles;        // each selected cycle, as original vertices it represents
    std::vector<VertexSet> picked;        // per cycle, the original vertices added to the set
};

/// Greedy short-cycle deletion on the preprocessed multigraph, expanded back to g: a
/// contracted vertex contributes the first original vertex of its path. The result is
/// re-checked and an InternalInconsistency is thrown if the remainder is not 2-choosable.
inline ApproxDeletion approx_2_del(const Graph& g) {
    ApproxDeletion out;
    CountedMultiGraph h = remove_c_prime_components(preprocess(CountedMultiGraph::lift(g)));
    while (h.order() > 0) {
        auto cycle = shortest_cycle(h);
        if (!cycle) throw InternalInconsistency("approx_2_del: preprocessed remainder is acyclic");
        VertexSet represented, picked;
        std::vector<char> on_cycle(static_cast<std::size_t>(h.order()), 0);
        for (Vertex t : *cycle) {
            on_cycle[t] = 1;
            picked.push_back(h.provenance(t).front());
            represented.insert(represented.end(), h.provenance(t).begin(), h.provenance(t).end());
        }
        std::sort(represented.begin(), represented.end());
        out.cycles.push_back(std::move(represented));
        out.set.insert(out.set.end(), picked.begin(), picked.end());
        out.picked.push_back(std::move(picked));
        VertexSet keep;
        for (Vertex v = 0; v < h.order(); ++v)
            if (!on_cycle[v]) keep.push_back(v);
        h = remove_c_prime_components(preprocess(h.induced(keep)));
    }
    std::sort(out.set.begin(), out.set.end());
    if (!is_2_choosable(g.without(out.set).first).choosable)
        throw InternalInconsistency("approx_2_del: expanded deletion set leaves a non-2-choosable graph");
    return out;
}

}  // namespace choosy
