#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vclique {

using Vertex = int;

/// Ascending, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;

    /// Normalizes: sorts ascending and drops duplicates.
    explicit VertexSet(std::vector<Vertex> members);

    /// Adopts an already ascending, duplicate-free list. Throws
    /// std::invalid_argument if the order invariant does not hold.
    static VertexSet from_ascending(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
    bool contains(Vertex v) const;

    std::vector<Vertex>::const_iterator begin() const { return members_.begin(); }
    std::vector<Vertex>::const_iterator end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

/// A vertex set that has been verified (or is asserted) to induce a
/// complete subgraph of its owning graph.
class Clique {
public:
    Clique() = default;
    explicit Clique(VertexSet members) : members_(std::move(members)) {}

    const VertexSet& members() const { return members_; }
    int size() const { return members_.size(); }

    bool operator==(const Clique&) const = default;

private:
    VertexSet members_;
};

/// Counts of inputs silently discarded while building a graph.
struct EdgeDrops {
    std::uint64_t self_loops = 0;
    std::uint64_t duplicates = 0;
};

/// Immutable simple undirected graph over vertices 0..n-1 with a dense
/// bit-matrix adjacency, so pair queries are O(1). Construction is
/// single-threaded; afterwards any number of threads may query it.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops and duplicate edges are
    /// dropped (counted in `drops` when given). Throws std::invalid_argument
    /// naming the offending edge if an endpoint is outside 0..n-1.
    static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                            EdgeDrops* drops = nullptr);

    int vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return edges_; }

    /// O(1) adjacency probe. Both ids must be in range (asserted).
    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(wpr_) +
                      (static_cast<std::size_t>(v) >> 6)] >>
                (static_cast<unsigned>(v) & 63u)) &
               1u;
    }

    /// Neighbor count of v. Throws std::out_of_range on a bad id.
    int degree(Vertex v) const;

    /// Largest degree over all vertices; 0 when the graph has no vertices.
    int max_degree() const;

    /// All vertices of degree >= d, ascending. The candidate set for a
    /// clique of size d+1.
    VertexSet vertices_with_degree_at_least(int d) const;

    /// True iff the subgraph induced by `t` is complete, decided by pairwise
    /// adjacency probes with early exit. Performs at most |t|(|t|-1)/2 probes;
    /// the count is written to `probes` when given. Rejects empty sets and
    /// out-of-range ids with std::invalid_argument.
    bool is_clique_subset(const VertexSet& t, std::uint64_t* probes = nullptr) const;

    /// Same check over a raw ascending duplicate-free id list.
    bool is_clique_members(std::span<const Vertex> members,
                           std::uint64_t* probes = nullptr) const;

    /// Adjacency row of v as packed 64-bit words, bit u set iff adjacent(v,u).
    std::span<const std::uint64_t> neighbor_bits(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(wpr_),
                static_cast<std::size_t>(wpr_)};
    }

    int words_per_row() const { return wpr_; }

private:
    int n_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
    std::uint64_t edges_ = 0;
};

}  // namespace vclique
