#pragma once

#include <cstdint>
#include <optional>

#include "vclique/graph.hpp"

namespace vclique {

struct OracleResult {
    Clique clique;
    std::uint64_t subsets_examined = 0;  ///< brute force: masks evaluated
    std::uint64_t nodes_expanded = 0;    ///< branch and bound: search nodes
    bool exact = true;                   ///< false only when a time budget tripped
};

/// Ground truth by exhausting all 2^n vertex subsets. Returns the
/// lexicographically smallest maximum clique. Guarded to n <= 25; larger
/// graphs are refused with std::invalid_argument.
OracleResult brute_force_max_clique(const Graph& g);

inline constexpr int kBruteForceMaxVertices = 25;

/// Exact maximum clique by depth-first expansion in fixed vertex order
/// 0..n-1, pruning any node whose depth plus remaining candidates cannot
/// beat the incumbent. First-found tie-breaking, so the result is
/// deterministic. With a time budget, a timeout returns the incumbent
/// flagged inexact.
OracleResult branch_and_bound_max_clique(const Graph& g,
                                         std::optional<double> time_budget_seconds = {});

}  // namespace vclique
