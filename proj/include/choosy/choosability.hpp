#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "choosy/errors.hpp"
#include "choosy/graph.hpp"

namespace choosy {

/// Color lists per vertex; colors are positive integers, each list sorted.
using ListAssignment = std::vector<std::vector<int>>;

struct Core {
    Graph graph;     // induced on `kept`; core vertex i is kept[i]
    VertexSet kept;  // ascending ids of g
};

/// Peels degree-1 vertices, always removing the currently removable vertex that appears
/// earliest in `priority` (a permutation of g's vertices).
inline Core peel_leaves(const Graph& g, std::span<const Vertex> priority) {
    const int n = g.order();
    if (static_cast<int>(priority.size()) != n) throw std::invalid_argument("priority must list every vertex");
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) rank.at(priority[i]) = i;
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    using Item = std::pair<int, Vertex>;  // (rank, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) ready.emplace(rank[v], v);
    }
    while (!ready.empty()) {
        Vertex v = ready.top().second;
        ready.pop();
        if (!alive[v] || deg[v] != 1) continue;
        alive[v] = 0;
        for (Vertex w : g.neighbors(v)) {
            if (!alive[w]) continue;
            if (--deg[w] == 1) ready.emplace(rank[w], w);
        }
    }
    VertexSet kept;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) kept.push_back(v);
    return {g.induced(kept), kept};
}

/// Core obtained by successive deletion of degree-1 vertices. Each tree component leaves
/// a single vertex; with the default order that survivor is the component's smallest id.
inline Core compute_core(const Graph& g) {
    VertexSet priority(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) priority[i] = g.order() - 1 - i;
    return peel_leaves(g, priority);
}

enum class CoreKind { K1, EvenCycle, Theta22Even, OutsideC };

inline const char* to_string(CoreKind kind) {
    switch (kind) {
        case CoreKind::K1: return "K1";
        case CoreKind::EvenCycle: return "even-cycle";
        case CoreKind::Theta22Even: return "theta-2-2-2m";
        case CoreKind::OutsideC: return "outside-C";
    }
    return "?";
}

/// One classified core component. For EvenCycle the component is C_{2m+2}; for
/// Theta22Even it is theta_{2,2,2m}. `m` is zero for K1 and OutsideC.
struct CoreClassification {
    CoreKind kind = CoreKind::OutsideC;
    int m = 0;
    VertexSet component;
};

namespace detail {

inline CoreClassification classify_component(const Graph& core, const VertexSet& comp) {
    const int size = static_cast<int>(comp.size());
    if (size == 1) return {CoreKind::K1, 0, comp};
    std::vector<Vertex> hubs;
    for (Vertex v : comp) {
        int d = core.degree(v);
        if (d == 3) hubs.push_back(v);
        else if (d != 2) return {CoreKind::OutsideC, 0, comp};
    }
    if (hubs.empty()) {
        if (size % 2 == 0 && size >= 4) return {CoreKind::EvenCycle, (size - 2) / 2, comp};
        return {CoreKind::OutsideC, 0, comp};
    }
    if (hubs.size() != 2) return {CoreKind::OutsideC, 0, comp};
    // Walk the three hub-to-hub paths through degree-2 vertices.
    std::vector<int> lengths;
    for (Vertex first : core.neighbors(hubs[0])) {
        Vertex prev = hubs[0], cur = first;
        int len = 1;
        while (core.degree(cur) == 2) {
            const auto& nb = core.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        if (cur != hubs[1]) return {CoreKind::OutsideC, 0, comp};
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0 &&
        lengths[0] + lengths[1] + lengths[2] - 1 == size)
        return {CoreKind::Theta22Even, lengths[2] / 2, comp};
    return {CoreKind::OutsideC, 0, comp};
}

}  // namespace detail

/// Labels every component of a core. Throws std::invalid_argument on a degree-1 vertex.
inline std::vector<CoreClassification> classify_core(const Graph& core) {
    for (Vertex v = 0; v < core.order(); ++v)
        if (core.degree(v) == 1) throw std::invalid_argument("classify_core: input has a degree-1 vertex");
    std::vector<CoreClassification> out;
    for (const auto& comp : connected_components(core)) out.push_back(detail::classify_component(core, comp));
    return out;
}

struct ChoosabilityVerdict {
    bool choosable = false;
    VertexSet witness;  // an outside-C core component, in the input graph's ids
};

/// 2-choosability through the core characterization, applied per component.
inline ChoosabilityVerdict is_2_choosable(const Graph& g) {
    Core core = compute_core(g);
    for (const auto& cls : classify_core(core.graph)) {
        if (cls.kind != CoreKind::OutsideC) continue;
        VertexSet witness;
        for (Vertex v : cls.component) witness.push_back(core.kept[v]);
        return {false, std::move(witness)};
    }
    return {true, {}};
}

inline void validate_lists(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.order()) throw std::invalid_argument("one list per vertex required");
    for (const auto& list : lists) {
        if (list.empty()) throw std::invalid_argument("empty color list");
        for (int c : list)
            if (c < 1) throw std::invalid_argument("colors must be positive");
    }
}

/// L-coloring by backtracking over ascending vertex ids and ascending list colors.
inline std::optional<std::vector<int>> is_L_colorable(const Graph& g, const ListAssignment& lists) {
    validate_lists(g, lists);
    const int n = g.order();
    std::vector<std::vector<int>> sorted = lists;
    for (auto& l : sorted) std::sort(l.begin(), l.end());
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    Vertex v = 0;
    while (v >= 0 && v < n) {
        bool placed = false;
        while (next[v] < sorted[v].size()) {
            int c = sorted[v][next[v]++];
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (w < v && color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++v;
        } else {
            next[v] = 0;
            color[v] = 0;
            --v;
        }
    }
    if (v < 0) return std::nullopt;
    return color;
}

struct OracleOptions {
    int max_vertices = 6;
    std::uint64_t budget = 200'000'000;  // list assignments examined
};

struct OracleVerdict {
    bool choosable = false;
    std::optional<ListAssignment> bad;  // first non-colorable assignment in enumeration order
    SearchStats stats;
};

namespace detail {

class ListEnumerator {
public:
    ListEnumerator(const Graph& g, int k, Budget& budget) : g_(g), k_(k), budget_(budget) {
        const int n = g.order();
        lower_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v))
                if (w < v) lower_[v].push_back(w);
        lists_.assign(static_cast<std::size_t>(n), 0);
        chosen_.assign(static_cast<std::size_t>(n), 0);
        // subsets_[m][s]: all s-subsets of colors {0..m-1}, in lexicographic order.
        const int max_colors = k * n;
        subsets_.resize(static_cast<std::size_t>(max_colors + 1));
        for (int m = 0; m <= max_colors; ++m) {
            subsets_[m].resize(static_cast<std::size_t>(k + 1));
            for (int s = 0; s <= k && s <= m; ++s) {
                std::vector<int> pick(static_cast<std::size_t>(s));
                for (int i = 0; i < s; ++i) pick[i] = i;
                while (true) {
                    std::uint64_t mask = 0;
                    for (int c : pick) mask |= std::uint64_t{1} << c;
                    subsets_[m][s].push_back(mask);
                    int i = s - 1;
                    while (i >= 0 && pick[i] == m - s + i) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
        }
    }

    /// True when every canonical assignment is colorable; otherwise lists_ holds the bad one.
    bool all_colorable() { return assign(0, 0); }

    [[nodiscard]] ListAssignment bad_assignment() const {
        ListAssignment out;
        for (std::uint64_t mask : lists_) {
            std::vector<int> list;
            for (int c = 0; c < 64; ++c)
                if (mask >> c & 1) list.push_back(c + 1);
            out.push_back(std::move(list));
        }
        return out;
    }

private:
    bool assign(Vertex v, int used) {
        if (v == g_.order()) {
            budget_.tick();
            return colorable(0);
        }
        for (int fresh = 0; fresh <= k_; ++fresh) {
            const int reuse = k_ - fresh;
            if (reuse > used) continue;
            std::uint64_t fresh_mask = 0;
            for (int i = 0; i < fresh; ++i) fresh_mask |= std::uint64_t{1} << (used + i);
            for (std::uint64_t mask : subsets_[used][reuse]) {
                lists_[v] = mask | fresh_mask;
                if (!assign(v + 1, used + fresh)) return false;
            }
        }
        return true;
    }

    bool colorable(Vertex v) {
        if (v == g_.order()) return true;
        std::uint64_t avail = lists_[v];
        for (Vertex w : lower_[v]) avail &= ~(std::uint64_t{1} << chosen_[w]);
        while (avail) {
            chosen_[v] = std::countr_zero(avail);
            if (colorable(v + 1)) return true;
            avail &= avail - 1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<std::vector<Vertex>> lower_;
    std::vector<std::uint64_t> lists_;
    std::vector<int> chosen_;
    std::vector<std::vector<std::vector<std::uint64_t>>> subsets_;
};

}  // namespace detail

/// Exhaustive k-choosability: checks every k-list assignment up to color renaming (colors
/// introduced in first-use order, vertices in ascending id). Independent of the core
/// characterization. Stops at the first non-colorable assignment.
inline OracleVerdict is_k_choosable_exhaustive(const Graph& g, int k, OracleOptions options = {}) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (g.order() > options.max_vertices)
        throw std::domain_error("exhaustive choosability oracle: graph exceeds the vertex cap");
    if (k * g.order() > 64) throw std::domain_error("exhaustive choosability oracle: palette exceeds 64 colors");
    Budget budget(options.budget, "exhaustive choosability");
    detail::ListEnumerator walker(g, k, budget);
    OracleVerdict verdict;
    verdict.choosable = walker.all_colorable();
    if (!verdict.choosable) verdict.bad = walker.bad_assignment();
    verdict.stats = budget.stats();
    return verdict;
}

/// "v: c1 c2 ... ck" per line, 1-based vertex ids.
inline std::string format_list_assignment(const ListAssignment& lists) {
    std::ostringstream out;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        out << v + 1 << ':';
        for (int c : lists[v]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

inline ListAssignment parse_list_assignment(const std::string& text) {
    ListAssignment out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'v: colors'");
        int v = std::stoi(line.substr(0, colon));
        if (v != static_cast<int>(out.size()) + 1)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": vertices must appear in order");
        std::istringstream colors(line.substr(colon + 1));
        std::vector<int> list;
        for (int c; colors >> c;) list.push_back(c);
        out.push_back(std::move(list));
    }
    return out;
}

}  // namespace choosy
