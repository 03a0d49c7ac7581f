#include "vclique/instances.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace vclique::instances {

namespace {

std::vector<std::uint32_t> weight_words(int bits, int weight) {
    std::vector<std::uint32_t> words;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << bits); ++w) {
        if (std::popcount(w) == weight) words.push_back(w);
    }
    return words;
}

Graph distance_graph(const std::vector<std::uint32_t>& words, int min_distance) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int n = static_cast<int>(words.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::popcount(words[static_cast<std::size_t>(i)] ^
                              words[static_cast<std::size_t>(j)]) >= min_distance) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph johnson(int bits, int weight, int min_distance) {
    if (bits < 1 || bits > 24 || weight < 0 || weight > bits) {
        throw std::invalid_argument("johnson: unsupported parameters");
    }
    return distance_graph(weight_words(bits, weight), min_distance);
}

Graph hamming(int bits, int min_distance) {
    if (bits < 1 || bits > 16) throw std::invalid_argument("hamming: unsupported bits");
    std::vector<std::uint32_t> words(std::size_t{1} << bits);
    for (std::uint32_t w = 0; w < words.size(); ++w) words[w] = w;
    return distance_graph(words, min_distance);
}

Graph c_fat(int n, int c) {
    if (n < 2 || c < 1) throw std::invalid_argument("c_fat: need n >= 2 and c >= 1");
    const int k = static_cast<int>(n / (c * std::log(static_cast<double>(n))));
    if (k < 1) throw std::invalid_argument("c_fat: parameters leave no groups");
    const int base = n / k;
    const int rem = n % k;
    std::vector<int> group(static_cast<std::size_t>(n));
    int v = 0;
    for (int gi = 0; gi < k; ++gi) {
        const int size = base + (gi < rem ? 1 : 0);
        for (int s = 0; s < size; ++s) group[static_cast<std::size_t>(v++)] = gi;
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const int d = (group[static_cast<std::size_t>(b)] -
                           group[static_cast<std::size_t>(a)] + k) % k;
            if (d == 0 || d == 1 || d == k - 1) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph mann_a9() {
    // Steiner triple system on 9 points: the 12 lines of the affine plane
    // of order 3, points numbered 3x + y over Z3 x Z3.
    std::vector<std::array<int, 3>> triples;
    const int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    for (const auto& dir : dirs) {
        for (int x0 = 0; x0 < 3; ++x0) {
            for (int y0 = 0; y0 < 3; ++y0) {
                std::array<int, 3> line{};
                for (int t = 0; t < 3; ++t) {
                    line[static_cast<std::size_t>(t)] =
                        3 * ((x0 + t * dir[0]) % 3) + (y0 + t * dir[1]) % 3;
                }
                std::sort(line.begin(), line.end());
                if (line[0] == 3 * x0 + y0) triples.push_back(line);  // keep each line once
            }
        }
    }
    if (triples.size() != 12) throw std::logic_error("mann_a9: expected 12 triples");

    // Vertices: one per (triple, point) incidence, then one per point.
    const int num_triples = 12;
    const int num_points = 9;
    const int n = num_triples * 3 + num_points;

    std::vector<std::pair<Vertex, Vertex>> edges;
    auto covered_point = [&](int vertex) {
        return triples[static_cast<std::size_t>(vertex / 3)][static_cast<std::size_t>(vertex % 3)];
    };
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const bool a_inc = a < 3 * num_triples;
            const bool b_inc = b < 3 * num_triples;
            bool adjacent = true;
            if (a_inc && b_inc) {
                adjacent = a / 3 != b / 3;  // one incidence per triple
            } else if (a_inc != b_inc) {
                const int inc = a_inc ? a : b;
                const int point = (a_inc ? b : a) - 3 * num_triples;
                adjacent = covered_point(inc) != point;  // a used point is not free
            }
            if (adjacent) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph keller(int dimension) {
    if (dimension < 1 || dimension > 7) throw std::invalid_argument("keller: unsupported dimension");
    const int total = 1 << (2 * dimension);  // tuples over {0,1,2,3}
    auto digit = [dimension](int word, int i) { return (word >> (2 * i)) & 3; };
    auto adjacent = [&](int u, int v) {
        if (u == v) return false;
        int differing = 0;
        bool by_two = false;
        for (int i = 0; i < dimension; ++i) {
            const int a = digit(u, i);
            const int b = digit(v, i);
            if (a != b) {
                ++differing;
                if (((a - b) & 3) == 2) by_two = true;
            }
        }
        return differing >= 2 && by_two;
    };

    std::vector<int> kept;
    for (int w = 0; w < total; ++w) {
        if (adjacent(0, w)) kept.push_back(w);
    }
    const int n = static_cast<int>(kept.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacent(kept[static_cast<std::size_t>(i)], kept[static_cast<std::size_t>(j)])) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

const std::vector<NamedInstance>& named_instances() {
    static const std::vector<NamedInstance> table = {
        {"johnson8-2-4", 28, 210, [] { return johnson(8, 2, 4); }},
        {"johnson8-4-4", 70, 1855, [] { return johnson(8, 4, 4); }},
        {"hamming6-4", 64, 704, [] { return hamming(6, 4); }},
        {"MANN_a9", 45, 918, [] { return mann_a9(); }},
        {"c-fat200-1", 200, 1534, [] { return c_fat(200, 1); }},
        {"c-fat500-1", 500, 4459, [] { return c_fat(500, 1); }},
        {"keller4", 171, 9435, [] { return keller(4); }},
    };
    return table;
}

}  // namespace vclique::instances
