#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "choosy/choosability.hpp"
#include "choosy/errors.hpp"
#include "choosy/graph.hpp"

namespace choosy {

/// Near-3-choosable decomposition: `independent` is an independent set and the graph
/// induced on `rest` is 2-choosable.
struct Decomposition {
    VertexSet independent;
    VertexSet rest;
};

struct ExactOptions {
    int max_vertices = 20;
    std::uint64_t budget = 50'000'000;  // node expansions
};

struct DeletionResult {
    int size = 0;
    VertexSet set;  // lexicographically smallest optimum, ascending
    SearchStats stats;
};

inline bool is_2_choosable_deletion(const Graph& g, std::span<const Vertex> removed) {
    return is_2_choosable(g.without(removed).first).choosable;
}

inline bool is_near_3_decomposition(const Graph& g, std::span<const Vertex> independent) {
    return is_independent(g, independent) && is_2_choosable_deletion(g, independent);
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cover) in.at(v) = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline VertexSet mask_vertices(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask vertices_mask(std::span<const Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= bit(v);
    return m;
}

inline std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) out[v] |= bit(w);
    return out;
}

inline void check_mask_order(const Graph& g, const ExactOptions& options, const char* who) {
    if (g.order() > 64) throw std::domain_error(std::string(who) + ": more than 64 vertices");
    if (g.order() > options.max_vertices)
        throw std::domain_error(std::string(who) + ": graph exceeds the configured vertex cap");
}

/// Vertex-minimal non-2-choosable induced subgraph inside `alive`, or 0 when G[alive] is
/// 2-choosable. Any 2-choosable deletion set must meet the returned set.
inline Mask two_choosable_obstruction(const Graph& g, Mask alive) {
    const VertexSet verts = mask_vertices(alive);
    const Graph sub = g.induced(verts);
    const auto verdict = is_2_choosable(sub);
    if (verdict.choosable) return 0;
    const Graph comp = sub.induced(verdict.witness);
    auto to_mask = [&](const VertexSet& local) {
        Mask m = 0;
        for (Vertex v : local) m |= bit(verts[verdict.witness[v]]);
        return m;
    };
    // A shortest cycle is chordless; when odd it is already a minimal obstruction.
    if (auto cycle = shortest_cycle(comp); cycle && cycle->size() % 2 == 1) return to_mask(*cycle);
    VertexSet current(comp.order());
    for (int i = 0; i < comp.order(); ++i) current[i] = i;
    for (int x = 0; x < comp.order(); ++x) {
        VertexSet trial;
        for (Vertex v : current)
            if (v != x) trial.push_back(v);
        if (!is_2_choosable(comp.induced(trial)).choosable) current = std::move(trial);
    }
    return to_mask(current);
}

/// Branch-and-bound over obstructions: every solution must delete a vertex of each
/// obstruction the finder reports, so branching on its vertices is complete.
class DeletionSearch {
public:
    using Finder = std::function<Mask(Mask alive)>;

    DeletionSearch(const Graph& g, Finder finder, bool independent, Budget& budget)
        : n_(g.order()), finder_(std::move(finder)), independent_(independent), budget_(budget),
          nbr_(neighbor_masks(g)) {}

    /// Can at most `r` further vertices outside `forbidden` be deleted to reach feasibility?
    bool feasible(Mask deleted, Mask forbidden, int r) {
        budget_.tick();
        const Mask alive = full_mask(n_) & ~deleted;
        const Mask first = finder_(alive);
        if (first == 0) return true;
        if (r == 0) return false;
        // Lower bound from a packing of pairwise disjoint obstructions.
        Mask rest = alive;
        Mask obstruction = first;
        int packed = 0;
        while (obstruction != 0) {
            if ((obstruction & ~forbidden) == 0) return false;
            if (++packed > r) return false;
            rest &= ~obstruction;
            obstruction = finder_(rest);
        }
        Mask candidates = first & ~forbidden;
        while (candidates) {
            const Vertex v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            Mask next_forbidden = forbidden;
            if (independent_) next_forbidden |= nbr_[v];
            if (feasible(deleted | bit(v), next_forbidden, r - 1)) return true;
            forbidden |= bit(v);
        }
        return false;
    }

    /// Smallest feasible size in [0, limit], or -1.
    int minimum(int limit) {
        for (int r = 0; r <= limit; ++r)
            if (feasible(0, 0, r)) return r;
        return -1;
    }

    /// Lexicographically smallest solution of size `opt` (opt must be the optimum).
    VertexSet lex_min(int opt) {
        Mask chosen = 0, forbidden = 0;
        Vertex last = -1;
        for (int remaining = opt; remaining > 0; --remaining) {
            bool found = false;
            for (Vertex v = last + 1; v < n_; ++v) {
                if (forbidden & bit(v)) continue;
                // Everything below v that is not chosen is excluded from the solution.
                Mask next_forbidden = forbidden | (full_mask(v) & ~chosen);
                if (independent_) next_forbidden |= nbr_[v];
                if (feasible(chosen | bit(v), next_forbidden, remaining - 1)) {
                    chosen |= bit(v);
                    forbidden = next_forbidden;
                    last = v;
                    found = true;
                    break;
                }
            }
            if (!found) throw InternalInconsistency("lexicographic reconstruction failed");
        }
        return mask_vertices(chosen);
    }

private:
    int n_;
    Finder finder_;
    bool independent_;
    Budget& budget_;
    std::vector<Mask> nbr_;
};

}  // namespace detail

/// Enumerates maximal independent sets (Bron-Kerbosch with pivoting on the complement),
/// in a deterministic order. The callback returns false to stop early.
inline void for_each_maximal_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                             Budget* budget = nullptr) {
    using detail::Mask;
    if (g.order() > 64) throw std::domain_error("maximal independent sets: more than 64 vertices");
    const auto nbr = detail::neighbor_masks(g);
    const int n = g.order();
    std::vector<Mask> compatible(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) compatible[v] = detail::full_mask(n) & ~nbr[v] & ~detail::bit(v);
    bool stop = false;
    std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
        if (stop) return;
        if (budget) budget->tick();
        if (p == 0 && x == 0) {
            if (!visit(detail::mask_vertices(r))) stop = true;
            return;
        }
        Vertex pivot = -1;
        int best = -1;
        for (Mask px = p | x; px; px &= px - 1) {
            Vertex u = std::countr_zero(px);
            int keep = std::popcount(p & compatible[u]);
            if (keep > best) {
                best = keep;
                pivot = u;
            }
        }
        for (Mask cand = p & ~compatible[pivot]; cand && !stop; cand &= cand - 1) {
            Vertex v = std::countr_zero(cand);
            expand(r | detail::bit(v), p & compatible[v], x & compatible[v]);
            p &= ~detail::bit(v);
            x |= detail::bit(v);
        }
    };
    expand(0, detail::full_mask(n), 0);
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Decides near-3-choosability. Only maximal independent sets are tried: enlarging the
/// deleted independent set keeps the remainder 2-choosable.
inline std::optional<Decomposition> near_3_decide(const Graph& g, ExactOptions options = {25, 50'000'000}) {
    detail::check_mask_order(g, options, "near_3_decide");
    Budget budget(options.budget, "near-3 decision");
    std::optional<Decomposition> found;
    for_each_maximal_independent_set(
        g,
        [&](const VertexSet& a) {
            auto [rest_graph, rest] = g.without(a);
            if (!is_2_choosable(rest_graph).choosable) return true;
            found = Decomposition{a, rest};
            return false;
        },
        &budget);
    return found;
}

/// Minimum independent set whose removal leaves a 2-choosable graph; nullopt if none exists.
inline std::optional<DeletionResult> min_near_3(const Graph& g, ExactOptions options = {25, 50'000'000}) {
    detail::check_mask_order(g, options, "min_near_3");
    auto upper = near_3_decide(g, options);
    if (!upper) return std::nullopt;
    Budget budget(options.budget, "min near-3");
    detail::DeletionSearch search(
        g, [&g](detail::Mask alive) { return detail::two_choosable_obstruction(g, alive); }, true, budget);
    const int opt = search.minimum(static_cast<int>(upper->independent.size()));
    if (opt < 0) throw InternalInconsistency("min_near_3: decision and optimization disagree");
    DeletionResult result{opt, search.lex_min(opt), {}};
    result.stats = budget.stats();
    return result;
}

/// Minimum 2-choosable deletion set (independence not required).
inline DeletionResult min_2_del_exact(const Graph& g, ExactOptions options = {}) {
    detail::check_mask_order(g, options, "min_2_del_exact");
    Budget budget(options.budget, "min 2-choosable deletion");
    detail::DeletionSearch search(
        g, [&g](detail::Mask alive) { return detail::two_choosable_obstruction(g, alive); }, false, budget);
    const int opt = search.minimum(g.order());
    DeletionResult result{opt, search.lex_min(opt), {}};
    result.stats = budget.stats();
    return result;
}

inline DeletionResult min_vertex_cover_exact(const Graph& g, ExactOptions options = {}) {
    detail::check_mask_order(g, options, "min_vertex_cover_exact");
    const auto edges = g.edges();
    Budget budget(options.budget, "min vertex cover");
    detail::DeletionSearch search(
        g,
        [&edges](detail::Mask alive) -> detail::Mask {
            for (auto [u, v] : edges)
                if ((alive >> u & 1) && (alive >> v & 1)) return detail::bit(u) | detail::bit(v);
            return 0;
        },
        false, budget);
    const int opt = search.minimum(g.order());
    DeletionResult result{opt, search.lex_min(opt), {}};
    result.stats = budget.stats();
    return result;
}

}  // namespace choosy
