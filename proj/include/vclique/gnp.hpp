#pragma once

#include <cstdint>

#include "vclique/graph.hpp"

namespace vclique {

/// A G(n,p) draw: every unordered vertex pair becomes an edge independently
/// with probability p. The seed is mandatory; there is no implicit entropy.
struct GnpSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic G(n,p) sampler. Pairs (u,v), u < v, are visited in
/// ascending (u,v) order; each takes one draw from a std::mt19937_64 seeded
/// with spec.seed, mapped to [0,1) via the top 53 bits, and the edge is kept
/// when the draw is < p. Identical specs therefore produce identical graphs.
/// Throws std::invalid_argument when n < 0 or p is outside [0,1].
Graph gen_gnp(const GnpSpec& spec);

}  // namespace vclique
