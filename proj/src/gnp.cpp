#include "vclique/gnp.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vclique {

Graph gen_gnp(const GnpSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("gen_gnp: negative vertex count");
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < spec.n; ++u) {
        for (int v = u + 1; v < spec.n; ++v) {
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < spec.p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(spec.n, edges);
}

}  // namespace vclique
