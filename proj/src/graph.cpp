#include "vclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace vclique {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_ascending(std::vector<Vertex> members) {
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i - 1] >= members[i]) {
            throw std::invalid_argument("VertexSet::from_ascending: ids not strictly ascending");
        }
    }
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                        EdgeDrops* drops) {
    if (n < 0) throw std::invalid_argument("Graph::from_edges: negative vertex count");
    Graph g;
    g.n_ = n;
    g.wpr_ = (n + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(g.wpr_), 0);

    EdgeDrops local;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("Graph::from_edges: edge #" + std::to_string(i) +
                                        " (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has a vertex outside 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        const std::size_t row = static_cast<std::size_t>(u) * g.wpr_;
        const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(v) & 63u);
        if (g.bits_[row + (static_cast<std::size_t>(v) >> 6)] & mask) {
            ++local.duplicates;
            continue;
        }
        g.bits_[row + (static_cast<std::size_t>(v) >> 6)] |= mask;
        g.bits_[static_cast<std::size_t>(v) * g.wpr_ + (static_cast<std::size_t>(u) >> 6)] |=
            std::uint64_t{1} << (static_cast<unsigned>(u) & 63u);
        ++g.edges_;
    }

    g.degrees_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (std::uint64_t w : g.neighbor_bits(v)) d += std::popcount(w);
        g.degrees_[static_cast<std::size_t>(v)] = d;
    }
    if (drops) *drops = local;
    return g;
}

int Graph::degree(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("Graph::degree: vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(n_ - 1));
    }
    return degrees_[static_cast<std::size_t>(v)];
}

int Graph::max_degree() const {
    int m = 0;
    for (int d : degrees_) m = std::max(m, d);
    return m;
}

VertexSet Graph::vertices_with_degree_at_least(int d) const {
    std::vector<Vertex> out;
    for (int v = 0; v < n_; ++v) {
        if (degrees_[static_cast<std::size_t>(v)] >= d) out.push_back(v);
    }
    return VertexSet::from_ascending(std::move(out));
}

bool Graph::is_clique_subset(const VertexSet& t, std::uint64_t* probes) const {
    return is_clique_members(t.members(), probes);
}

bool Graph::is_clique_members(std::span<const Vertex> members, std::uint64_t* probes) const {
    if (members.empty()) {
        throw std::invalid_argument("is_clique_subset: empty vertex set");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= n_) {
            throw std::invalid_argument("is_clique_subset: vertex " +
                                        std::to_string(members[i]) + " outside 0.." +
                                        std::to_string(n_ - 1));
        }
        assert(i == 0 || members[i - 1] < members[i]);
    }

    std::uint64_t count = 0;
    bool complete = true;
    for (std::size_t i = 0; i + 1 < members.size() && complete; ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            ++count;
            if (!adjacent(members[i], members[j])) {
                complete = false;
                break;
            }
        }
    }
    if (probes) *probes = count;
    return complete;
}

}  // namespace vclique
