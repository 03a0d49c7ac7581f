#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vclique/graph.hpp"

namespace vclique::instances {

/// Constant-weight binary-code graph: vertices are the weight-w words of
/// `bits` bits (combinations in lexicographic order), adjacent when their
/// Hamming distance is at least `min_distance`. johnson(8,2,4) and
/// johnson(8,4,4) reproduce the clique benchmarks of the same name.
Graph johnson(int bits, int weight, int min_distance);

/// Binary-code graph over all 2^bits words, adjacent at Hamming distance
/// >= min_distance. hamming(6,4) reproduces the hamming6-4 benchmark.
Graph hamming(int bits, int min_distance);

/// Fault-diagnosis ring: n vertices split consecutively into
/// k = floor(n / (c ln n)) groups, the first n mod k groups one larger;
/// vertices are adjacent within a group and between cyclically adjacent
/// groups. c_fat(200,1) and c_fat(500,1) reproduce c-fat200-1/c-fat500-1.
Graph c_fat(int n, int c);

/// Clique translation of the Steiner-triple set-covering instance on 9
/// points (the MANN_a9 benchmark): one vertex per (triple, point)
/// incidence and one per point, with all pairs adjacent except incidences
/// of the same triple and each incidence with its own point's vertex.
Graph mann_a9();

/// Keller tiling graph of the given dimension, reduced to the common
/// neighborhood of the zero tuple the way the published benchmark is:
/// tuples over {0,1,2,3}, adjacent when they differ in at least two
/// coordinates and in at least one by exactly 2 (mod 4). keller(4)
/// reproduces keller4.
Graph keller(int dimension);

struct NamedInstance {
    std::string name;
    int expected_n;
    long long expected_m;
    std::function<Graph()> build;
};

/// Benchmark graphs this library can regenerate, keyed by their customary
/// file names, with the published vertex/edge counts for self-checks.
const std::vector<NamedInstance>& named_instances();

}  // namespace vclique::instances
