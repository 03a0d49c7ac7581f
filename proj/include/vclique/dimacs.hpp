#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vclique/graph.hpp"

namespace vclique {

/// Parse failure with the 1-based line it was detected on.
class DimacsParseError : public std::runtime_error {
public:
    DimacsParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Oddities tolerated while reading a file, surfaced for diagnostics.
struct DimacsAnomalies {
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
    /// Distinct edges actually present minus the count declared on the
    /// problem line. The declared count is advisory only.
    long long declared_edge_delta = 0;
};

struct DimacsDocument {
    int n = 0;
    long long declared_edges = 0;
    /// Edge endpoints exactly as read, 1-based, in file order (duplicates
    /// and self-loops included; they are dropped only from the Graph).
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> comments;
    DimacsAnomalies anomalies;
};

struct ParsedDimacs {
    DimacsDocument document;
    Graph graph;
};

/// Reads the ASCII DIMACS clique format: `c` comment lines, one
/// `p edge <n> <m>` problem line (`p col` is accepted too), and `e <u> <v>`
/// edge lines with 1-based endpoints. Duplicate edges, self-loops, edges in
/// any order after the problem line, and a wrong declared edge count are
/// tolerated and recorded as anomalies. Structural problems (no problem
/// line, an edge before it, endpoints outside 1..n, malformed tokens) throw
/// DimacsParseError with the offending line number.
ParsedDimacs parse_dimacs(std::string_view text);

ParsedDimacs parse_dimacs_file(const std::filesystem::path& path);

/// Canonical form: comments first, then `p edge n m`, then one `e u v` line
/// per edge with u < v, ascending, 1-based. parse_dimacs(write_dimacs(g))
/// reconstructs an identical graph.
std::string write_dimacs(const Graph& g, std::span<const std::string> comments = {});

void write_dimacs_file(const std::filesystem::path& path, const Graph& g,
                       std::span<const std::string> comments = {});

}  // namespace vclique
