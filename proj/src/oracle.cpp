#include "vclique/oracle.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace vclique {

namespace {

/// Ascending-list lexicographic order for equal-size vertex sets encoded as
/// bitmasks: the set owning the lowest differing bit has the smaller first
/// divergent element.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    const std::uint32_t lowest = diff & (~diff + 1u);
    return (lowest & a) != 0;  // a owns the smaller first divergent element
}

std::vector<Vertex> mask_to_vertices(std::uint32_t mask) {
    std::vector<Vertex> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1u;
    }
    return out;
}

}  // namespace

OracleResult brute_force_max_clique(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kBruteForceMaxVertices) {
        throw std::invalid_argument("brute_force_max_clique: n = " + std::to_string(n) +
                                    " exceeds the guard of " +
                                    std::to_string(kBruteForceMaxVertices) + " vertices");
    }

    OracleResult result;
    if (n == 0) return result;

    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u != v && g.adjacent(v, u)) adjacency[static_cast<std::size_t>(v)] |= 1u << u;
        }
    }

    // is_clique[m] by removing the lowest vertex of m: a set is a clique iff
    // the rest is a clique fully adjacent to that vertex.
    const std::size_t total = std::size_t{1} << n;
    std::vector<bool> is_clique(total, false);
    is_clique[0] = true;
    std::uint32_t best_mask = 0;
    int best_size = 0;
    for (std::size_t m = 1; m < total; ++m) {
        const std::uint32_t mask = static_cast<std::uint32_t>(m);
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1u);
        const bool clique =
            is_clique[rest] && (rest & ~adjacency[static_cast<std::size_t>(low)]) == 0;
        is_clique[m] = clique;
        ++result.subsets_examined;
        if (!clique) continue;
        const int size = std::popcount(mask);
        if (size > best_size || (size == best_size && lex_less(mask, best_mask))) {
            best_size = size;
            best_mask = mask;
        }
    }

    result.clique = Clique(VertexSet::from_ascending(mask_to_vertices(best_mask)));
    return result;
}

namespace {

struct BnbSearch {
    const Graph& g;
    int wpr;
    std::uint64_t nodes = 0;
    std::vector<Vertex> current;
    std::vector<Vertex> best;
    std::vector<std::uint64_t> levels;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;

    BnbSearch(const Graph& graph, std::optional<double> seconds)
        : g(graph), wpr(graph.words_per_row()) {
        const int n = g.vertex_count();
        levels.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(wpr), 0);
        if (seconds) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*seconds));
        }
    }

    std::uint64_t* level(int depth) {
        return levels.data() + static_cast<std::size_t>(depth) * static_cast<std::size_t>(wpr);
    }

    static int popcount(const std::uint64_t* words, int wpr) {
        int c = 0;
        for (int i = 0; i < wpr; ++i) c += std::popcount(words[i]);
        return c;
    }

    void expand(int depth, int cand_count) {
        ++nodes;
        if (depth + cand_count <= static_cast<int>(best.size())) {
            throw std::logic_error("bnb expanded a node that cannot beat the incumbent");
        }
        if (has_deadline && (nodes & 4095u) == 0 &&
            std::chrono::steady_clock::now() >= deadline) {
            timed_out = true;
            return;
        }
        const std::uint64_t* cand = level(depth);
        if (cand_count == 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        int remaining = cand_count;
        for (int wi = 0; wi < wpr && !timed_out; ++wi) {
            std::uint64_t word = cand[wi];
            while (word != 0) {
                if (depth + remaining <= static_cast<int>(best.size())) return;
                const Vertex v = (wi << 6) + std::countr_zero(word);
                word &= word - 1;
                std::uint64_t* child = level(depth + 1);
                const auto row = g.neighbor_bits(v);
                int child_count = 0;
                // candidates after v only: v's word masked, earlier words dropped
                for (int i = 0; i < wpr; ++i) child[i] = 0;
                {
                    const int vw = v >> 6;
                    const unsigned bit = static_cast<unsigned>(v) & 63u;
                    std::uint64_t w =
                        cand[vw] & row[static_cast<std::size_t>(vw)] &
                        (bit == 63u ? 0 : ~std::uint64_t{0} << (bit + 1));
                    child[vw] = w;
                    child_count += std::popcount(w);
                    for (int i = vw + 1; i < wpr; ++i) {
                        child[i] = cand[i] & row[static_cast<std::size_t>(i)];
                        child_count += std::popcount(child[i]);
                    }
                }
                current.push_back(v);
                if (static_cast<int>(current.size()) + child_count >
                    static_cast<int>(best.size())) {
                    expand(depth + 1, child_count);
                }
                current.pop_back();
                if (timed_out) return;
                --remaining;
            }
        }
    }
};

}  // namespace

OracleResult branch_and_bound_max_clique(const Graph& g,
                                         std::optional<double> time_budget_seconds) {
    OracleResult result;
    const int n = g.vertex_count();
    if (n == 0) return result;

    BnbSearch search(g, time_budget_seconds);
    std::uint64_t* root = search.level(0);
    for (int v = 0; v < n; ++v) {
        root[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1}
                                                  << (static_cast<unsigned>(v) & 63u);
    }
    search.expand(0, n);

    result.nodes_expanded = search.nodes;
    result.exact = !search.timed_out;
    result.clique = Clique(VertexSet::from_ascending(std::move(search.best)));
    return result;
}

}  // namespace vclique
