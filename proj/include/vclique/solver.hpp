#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vclique/graph.hpp"

namespace vclique {

/// How candidate subsets are enumerated when probing for a clique of a
/// given size. Both modes return the identical vertex set; `pruned` only
/// skips subsets that cannot possibly verify.
enum class EnumerationMode { naive, pruned };

struct SolverConfig {
    EnumerationMode mode = EnumerationMode::pruned;
    /// Max subsets examined per solve, all probes combined. Absent = unlimited.
    std::optional<std::uint64_t> combination_budget;
    /// Wall-clock limit for a solve. Absent = unlimited.
    std::optional<double> time_budget_seconds;

    /// Throws std::invalid_argument when a present budget is not positive.
    void validate() const;
};

struct SearchStats {
    std::uint64_t iterations = 0;              ///< size probes made by the driver
    std::uint64_t combinations_enumerated = 0; ///< subsets examined, partial or full
    std::uint64_t isclique_calls = 0;
    std::uint64_t adjacency_probes = 0;
    /// Calls where is_clique_subset exceeded |t|(|t|-1)/2 probes. Always 0.
    std::uint64_t isclique_probe_violations = 0;
    double elapsed_seconds = 0.0;
};

enum class SolveStatus { exact, budget_exhausted };

struct SolveResult {
    SolveStatus status = SolveStatus::exact;
    /// The maximum clique when exact; the best clique found so far (a valid
    /// lower bound, not claimed maximum) when the budget was exhausted.
    /// Absent only for the empty graph or when nothing was found in budget.
    std::optional<Clique> clique;
    SearchStats stats;

    int size() const { return clique ? clique->size() : 0; }
};

/// Binary-search driver state over the degree threshold. A probe at
/// `probe` asks whether a clique of size probe+1 exists.
struct SearchState {
    int lower = 0;
    int upper = 0;
    int probe = 0;
    std::optional<Clique> best;
};

enum class ProbeOutcome { found, none, budget_exhausted };

struct ProbeResult {
    ProbeOutcome outcome = ProbeOutcome::none;
    std::optional<Clique> clique;
};

/// Existence test injected into the driver: does a clique of size
/// threshold+1 exist? Returns the clique when one was found.
using ThresholdProbe = std::function<ProbeResult(int threshold, SearchStats& stats)>;

/// Runs the size binary search over thresholds 0..max_degree, halving the
/// open range after each probe, and returns the clique recorded by the last
/// successful probe. Exposed separately from find_maximum_clique so the
/// driver can be exercised against scripted probes.
SolveResult run_threshold_search(int max_degree, const ThresholdProbe& probe);

/// Advances `t`, a strictly ascending index tuple into {0..k-1}, to its
/// lexicographic successor among same-size tuples. Returns false (leaving
/// `t` untouched) when `t` is already the last tuple {k-|t|..k-1}.
bool next_combination(std::vector<int>& t, int k);

struct SelectResult {
    enum class Status { found, none, budget_exhausted };
    Status status = Status::none;
    std::optional<Clique> clique;
};

/// Searches the candidate set `s` for a clique of exactly `size` vertices,
/// in lexicographic subset order, returning the first subset that verifies.
/// naive mode examines every combination; pruned mode backtracks past
/// prefixes containing a non-adjacent pair (and prefixes with too few
/// compatible candidates left), which cannot change the returned set.
/// Requires size >= 1 and |s| >= size.
SelectResult select_clique_of_size(const Graph& g, const VertexSet& s, int size,
                                   const SolverConfig& cfg, SearchStats& stats);

/// Exact maximum clique via threshold binary search with candidate
/// elimination by degree and exhaustive verification of the survivors.
SolveResult find_maximum_clique(const Graph& g, const SolverConfig& cfg = {});

}  // namespace vclique
