#include "vclique/solver.hpp"

#include <bit>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace vclique {

namespace {

using Clock = std::chrono::steady_clock;

/// Solve-wide work budget shared by every probe of one solve.
struct Budget {
    std::optional<std::uint64_t> max_combinations;
    bool has_deadline = false;
    Clock::time_point deadline;
    std::uint64_t spent = 0;

    static Budget from(const SolverConfig& cfg) {
        Budget b;
        b.max_combinations = cfg.combination_budget;
        if (cfg.time_budget_seconds) {
            b.has_deadline = true;
            b.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(*cfg.time_budget_seconds));
        }
        return b;
    }

    /// Accounts for examining one more subset; false when the budget is spent.
    /// The wall clock is consulted every 1024 subsets.
    bool take(SearchStats& stats) {
        if (max_combinations && spent >= *max_combinations) return false;
        if (has_deadline && (spent & 1023u) == 0 && Clock::now() >= deadline) return false;
        ++spent;
        ++stats.combinations_enumerated;
        return true;
    }
};

bool checked_isclique(const Graph& g, std::span<const Vertex> t, SearchStats& stats) {
    std::uint64_t probes = 0;
    ++stats.isclique_calls;
    const bool ok = g.is_clique_members(t, &probes);
    stats.adjacency_probes += probes;
    const std::uint64_t len = t.size();
    if (probes > len * (len - 1) / 2) ++stats.isclique_probe_violations;
    return ok;
}

SelectResult select_naive(const Graph& g, const VertexSet& s, int size, Budget& budget,
                          SearchStats& stats) {
    const int k = s.size();
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vertex> subset(static_cast<std::size_t>(size));
    for (;;) {
        if (!budget.take(stats)) return {SelectResult::Status::budget_exhausted, {}};
        for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = s[idx[static_cast<std::size_t>(i)]];
        if (checked_isclique(g, subset, stats)) {
            return {SelectResult::Status::found,
                    Clique(VertexSet::from_ascending(std::move(subset)))};
        }
        if (!next_combination(idx, k)) return {SelectResult::Status::none, {}};
    }
}

/// Backtracking enumeration in the same lexicographic order as the naive
/// walk over subsets of `s`. A prefix is extended only with candidates
/// adjacent to all of it, and abandoned when fewer compatible candidates
/// remain than slots to fill; neither skip can contain the first verifying
/// subset, so the returned set matches naive mode exactly.
struct PrunedSearch {
    const Graph& g;
    int target_size;
    Budget& budget;
    SearchStats& stats;
    int wpr;
    std::vector<std::uint64_t> levels;  // candidate bits per depth
    std::vector<Vertex> prefix;
    std::optional<Clique> found;
    bool out_of_budget = false;

    PrunedSearch(const Graph& graph, const VertexSet& s, int size, Budget& b, SearchStats& st)
        : g(graph), target_size(size), budget(b), stats(st), wpr(graph.words_per_row()) {
        levels.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(wpr), 0);
        std::uint64_t* root = level(0);
        for (Vertex v : s) root[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63u);
        prefix.reserve(static_cast<std::size_t>(size));
    }

    std::uint64_t* level(int depth) {
        return levels.data() + static_cast<std::size_t>(depth) * static_cast<std::size_t>(wpr);
    }

    static int popcount(const std::uint64_t* words, int wpr) {
        int c = 0;
        for (int i = 0; i < wpr; ++i) c += std::popcount(words[i]);
        return c;
    }

    /// Intersects `cand` with the neighborhood of v restricted to ids > v,
    /// writing into `out`. Returns the popcount of the result.
    int intersect_above(const std::uint64_t* cand, Vertex v, std::uint64_t* out) const {
        const auto row = g.neighbor_bits(v);
        const int word = v >> 6;
        const unsigned bit = static_cast<unsigned>(v) & 63u;
        int count = 0;
        for (int i = 0; i < word; ++i) out[i] = 0;
        std::uint64_t w = cand[word] & row[static_cast<std::size_t>(word)];
        w &= bit == 63u ? 0 : ~std::uint64_t{0} << (bit + 1);
        out[word] = w;
        count += std::popcount(w);
        for (int i = word + 1; i < wpr; ++i) {
            out[i] = cand[i] & row[static_cast<std::size_t>(i)];
            count += std::popcount(out[i]);
        }
        return count;
    }

    /// Returns true when the walk is finished (clique found or budget spent).
    bool walk(int depth) {
        const std::uint64_t* cand = level(depth);
        int remaining = popcount(cand, wpr);
        for (int wi = 0; wi < wpr; ++wi) {
            std::uint64_t word = cand[wi];
            while (word != 0) {
                if (depth + remaining < target_size) return false;  // too few left
                const Vertex v = (wi << 6) + std::countr_zero(word);
                word &= word - 1;
                if (!budget.take(stats)) {
                    out_of_budget = true;
                    return true;
                }
                prefix.push_back(v);
                if (depth + 1 == target_size) {
                    const bool ok = checked_isclique(g, prefix, stats);
                    if (!ok) throw std::logic_error("pruned walk completed a non-clique");
                    found = Clique(VertexSet::from_ascending(prefix));
                    return true;
                }
                const int child_count = intersect_above(cand, v, level(depth + 1));
                stats.adjacency_probes += static_cast<std::uint64_t>(remaining - 1);
                if (child_count >= target_size - depth - 1 && walk(depth + 1)) return true;
                prefix.pop_back();
                --remaining;
            }
        }
        return false;
    }
};

SelectResult select_pruned(const Graph& g, const VertexSet& s, int size, Budget& budget,
                           SearchStats& stats) {
    PrunedSearch search(g, s, size, budget, stats);
    search.walk(0);
    if (search.found) return {SelectResult::Status::found, std::move(search.found)};
    if (search.out_of_budget) return {SelectResult::Status::budget_exhausted, {}};
    return {SelectResult::Status::none, {}};
}

SelectResult run_select(const Graph& g, const VertexSet& s, int size, EnumerationMode mode,
                        Budget& budget, SearchStats& stats) {
    return mode == EnumerationMode::naive ? select_naive(g, s, size, budget, stats)
                                          : select_pruned(g, s, size, budget, stats);
}

}  // namespace

void SolverConfig::validate() const {
    if (combination_budget && *combination_budget == 0) {
        throw std::invalid_argument("SolverConfig: combination_budget must be positive");
    }
    if (time_budget_seconds && *time_budget_seconds <= 0.0) {
        throw std::invalid_argument("SolverConfig: time_budget_seconds must be positive");
    }
}

bool next_combination(std::vector<int>& t, int k) {
    const int len = static_cast<int>(t.size());
    int i = len - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == k - len + i) --i;
    if (i < 0) return false;
    ++t[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < len; ++j) {
        t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

SolveResult run_threshold_search(int max_degree, const ThresholdProbe& probe) {
    const auto start = Clock::now();
    SolveResult result;
    SearchState state;
    state.lower = 0;
    state.upper = max_degree;
    while (state.lower <= state.upper) {
        state.probe = (state.lower + state.upper) / 2;
        ++result.stats.iterations;
        ProbeResult pr = probe(state.probe, result.stats);
        switch (pr.outcome) {
            case ProbeOutcome::found:
                if (!pr.clique) throw std::logic_error("probe reported found without a clique");
                state.best = std::move(pr.clique);
                state.lower = state.probe + 1;
                break;
            case ProbeOutcome::none:
                state.upper = state.probe - 1;
                break;
            case ProbeOutcome::budget_exhausted:
                result.status = SolveStatus::budget_exhausted;
                break;
        }
        if (result.status == SolveStatus::budget_exhausted) break;
    }
    result.clique = std::move(state.best);
    result.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

SelectResult select_clique_of_size(const Graph& g, const VertexSet& s, int size,
                                   const SolverConfig& cfg, SearchStats& stats) {
    cfg.validate();
    if (size < 1) throw std::invalid_argument("select_clique_of_size: size must be >= 1");
    if (s.size() < size) {
        throw std::invalid_argument("select_clique_of_size: candidate set smaller than size");
    }
    if (!s.empty() && (s[0] < 0 || s[s.size() - 1] >= g.vertex_count())) {
        throw std::invalid_argument("select_clique_of_size: candidate outside the graph");
    }
    Budget budget = Budget::from(cfg);
    return run_select(g, s, size, cfg.mode, budget, stats);
}

SolveResult find_maximum_clique(const Graph& g, const SolverConfig& cfg) {
    cfg.validate();
    const auto start = Clock::now();
    Budget budget = Budget::from(cfg);

    const ThresholdProbe probe = [&](int threshold, SearchStats& stats) -> ProbeResult {
        VertexSet s = g.vertices_with_degree_at_least(threshold);
        if (s.size() < threshold + 1) return {ProbeOutcome::none, {}};
        SelectResult sel = run_select(g, s, threshold + 1, cfg.mode, budget, stats);
        switch (sel.status) {
            case SelectResult::Status::found:
                return {ProbeOutcome::found, std::move(sel.clique)};
            case SelectResult::Status::none:
                return {ProbeOutcome::none, {}};
            case SelectResult::Status::budget_exhausted:
            default:
                return {ProbeOutcome::budget_exhausted, {}};
        }
    };

    SolveResult result = run_threshold_search(g.max_degree(), probe);
    if (result.clique) {
        if (!g.is_clique_subset(result.clique->members())) {
            throw std::logic_error("find_maximum_clique: result failed re-verification");
        }
        if (result.clique->size() > g.max_degree() + 1) {
            throw std::logic_error("find_maximum_clique: result exceeds max_degree + 1");
        }
    }
    result.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

}  // namespace vclique
