#pragma once

// Shared helpers for the test binaries. The enumeration helpers here are
// deliberately written as plainly as possible, independent of the library's
// search paths, so they can serve as reference answers.

#include <algorithm>
#include <utility>
#include <vector>

#include "vclique/graph.hpp"

namespace support {

inline vclique::Graph from_pairs(int n,
                                 const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<vclique::Vertex, vclique::Vertex>> e(edges.begin(), edges.end());
    return vclique::Graph::from_edges(n, e);
}

inline vclique::Graph complete(int n) {
    std::vector<std::pair<vclique::Vertex, vclique::Vertex>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return vclique::Graph::from_edges(n, e);
}

inline vclique::Graph path(int n) {
    std::vector<std::pair<vclique::Vertex, vclique::Vertex>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return vclique::Graph::from_edges(n, e);
}

inline vclique::Graph cycle(int n) {
    std::vector<std::pair<vclique::Vertex, vclique::Vertex>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    if (n > 2) e.emplace_back(n - 1, 0);
    return vclique::Graph::from_edges(n, e);
}

/// Direct pairwise adjacency check, no early exit, no instrumentation.
inline bool pairwise_complete(const vclique::Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    }
    return true;
}

/// Reference maximum clique size by plain recursive extension over vertex
/// ids ascending, no bound pruning at all. Only for small graphs.
inline void extend_all(const vclique::Graph& g, std::vector<int>& current, int from,
                       int& best) {
    best = std::max(best, static_cast<int>(current.size()));
    for (int v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : current) {
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            current.push_back(v);
            extend_all(g, current, v + 1, best);
            current.pop_back();
        }
    }
}

inline int reference_max_clique_size(const vclique::Graph& g) {
    std::vector<int> current;
    int best = 0;
    extend_all(g, current, 0, best);
    return best;
}

/// All size-L subsets of `s` in lexicographic order; the reference for the
/// solver's enumeration order.
inline std::vector<std::vector<int>> all_subsets_lex(const std::vector<int>& s, int L) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int k = static_cast<int>(s.size());
    if (L == 0 || L > k) return out;
    for (;;) {
        std::vector<int> subset;
        subset.reserve(static_cast<std::size_t>(L));
        for (int i : idx) subset.push_back(s[static_cast<std::size_t>(i)]);
        out.push_back(std::move(subset));
        int i = L - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - L + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < L; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

}  // namespace support
