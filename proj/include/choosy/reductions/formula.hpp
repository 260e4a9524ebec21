#pragma once

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace choosy {

/// 3-CNF instance. Literals use the DIMACS convention: +i is x_i, -i is its negation.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
    /// Optional planar rotation: rotation[j][r] is the 0-based literal slot of clause j that
    /// attaches to hexagon vertex c_{j,r+1}. Empty means identity for every clause.
    std::vector<std::array<int, 3>> rotation;

    [[nodiscard]] int num_clauses() const noexcept { return static_cast<int>(clauses.size()); }

    [[nodiscard]] int slot_at(int clause, int r) const {
        return rotation.empty() ? r : rotation.at(clause)[r];
    }

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const {
        if (num_vars < 1) throw std::invalid_argument("formula needs at least one variable");
        for (std::size_t j = 0; j < clauses.size(); ++j) {
            const auto& c = clauses[j];
            for (int r = 0; r < 3; ++r) {
                if (c[r] == 0 || std::abs(c[r]) > num_vars)
                    throw std::invalid_argument("clause " + std::to_string(j + 1) + ": literal out of range");
                for (int q = 0; q < r; ++q)
                    if (c[q] == c[r])
                        throw std::invalid_argument("clause " + std::to_string(j + 1) + ": repeated literal");
            }
        }
        if (!rotation.empty()) {
            if (rotation.size() != clauses.size())
                throw std::invalid_argument("rotation must list every clause");
            for (std::size_t j = 0; j < rotation.size(); ++j) {
                std::array<int, 3> seen{0, 0, 0};
                for (int s : rotation[j]) {
                    if (s < 0 || s > 2 || seen[s]++)
                        throw std::invalid_argument("rotation of clause " + std::to_string(j + 1) +
                                                    " is not a permutation");
                }
            }
        }
    }

    /// tau[i] is the value of x_{i+1}.
    [[nodiscard]] bool literal_true(int literal, const std::vector<bool>& tau) const {
        const bool value = tau.at(static_cast<std::size_t>(std::abs(literal) - 1));
        return literal > 0 ? value : !value;
    }

    [[nodiscard]] bool satisfied_by(const std::vector<bool>& tau) const {
        if (static_cast<int>(tau.size()) != num_vars) throw std::invalid_argument("assignment length mismatch");
        for (const auto& c : clauses) {
            if (!literal_true(c[0], tau) && !literal_true(c[1], tau) && !literal_true(c[2], tau)) return false;
        }
        return true;
    }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Every satisfying assignment, enumerated with x_1 as the least significant bit.
inline std::vector<std::vector<bool>> satisfying_assignments(const CnfFormula& phi) {
    if (phi.num_vars > 24) throw std::domain_error("too many variables to enumerate");
    std::vector<std::vector<bool>> out;
    for (unsigned bits = 0; bits < (1u << phi.num_vars); ++bits) {
        std::vector<bool> tau(static_cast<std::size_t>(phi.num_vars));
        for (int i = 0; i < phi.num_vars; ++i) tau[i] = (bits >> i) & 1;
        if (phi.satisfied_by(tau)) out.push_back(std::move(tau));
    }
    return out;
}

/// Parses "1011" style assignments (first character is x_1).
inline std::vector<bool> parse_assignment_bits(const std::string& bits) {
    std::vector<bool> tau;
    for (char ch : bits) {
        if (ch == '1' || ch == 'T' || ch == 't') tau.push_back(true);
        else if (ch == '0' || ch == 'F' || ch == 'f') tau.push_back(false);
        else throw std::invalid_argument("assignment must consist of 0/1 characters");
    }
    return tau;
}

}  // namespace choosy
