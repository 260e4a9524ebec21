#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace choosy {

/// Node-expansion counter shared by every exhaustive search.
struct SearchStats {
    std::uint64_t nodes = 0;
};

/// Thrown when a search exceeds its node budget. Carries the work done so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, SearchStats stats)
        : std::runtime_error(what + " (budget exceeded after " + std::to_string(stats.nodes) +
                             " nodes)"),
          stats_(stats) {}

    [[nodiscard]] const SearchStats& stats() const noexcept { return stats_; }

private:
    SearchStats stats_;
};

/// Budget tracker: call tick() once per expanded node.
class Budget {
public:
    explicit Budget(std::uint64_t max_nodes, std::string label = "search")
        : max_nodes_(max_nodes), label_(std::move(label)) {}

    void tick() {
        if (++stats_.nodes > max_nodes_) throw BudgetExceeded(label_, stats_);
    }

    [[nodiscard]] const SearchStats& stats() const noexcept { return stats_; }

private:
    std::uint64_t max_nodes_;
    std::string label_;
    SearchStats stats_;
};

/// Raised when an algorithm detects that its own output is wrong. Never expected.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace choosy
