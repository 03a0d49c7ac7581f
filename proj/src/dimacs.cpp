#include "vclique/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace vclique {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

long long parse_int(std::string_view token, int line, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DimacsParseError(line, std::string("expected an integer ") + what + ", got '" +
                                         std::string(token) + "'");
    }
    return value;
}

}  // namespace

ParsedDimacs parse_dimacs(std::string_view text) {
    DimacsDocument doc;
    bool have_problem = false;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? text.size() - pos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "c") {
            std::size_t body = line.find('c');
            std::size_t after = body + 1;
            if (after < line.size() && (line[after] == ' ' || line[after] == '\t')) ++after;
            doc.comments.emplace_back(line.substr(after));
            continue;
        }
        if (tokens[0] == "p") {
            if (have_problem) throw DimacsParseError(line_no, "second problem line");
            // `p edge n m`; some distributions write `p col n m` or drop the word
            std::size_t at = 1;
            if (at < tokens.size() && (tokens[at] == "edge" || tokens[at] == "edges" ||
                                       tokens[at] == "col")) {
                ++at;
            }
            if (tokens.size() != at + 2) {
                throw DimacsParseError(line_no, "problem line is not 'p edge <n> <m>'");
            }
            const long long n = parse_int(tokens[at], line_no, "vertex count");
            const long long m = parse_int(tokens[at + 1], line_no, "edge count");
            // dense adjacency: n*n/8 bytes, so cap where that stays modest
            if (n < 0 || n > 20'000) {
                throw DimacsParseError(line_no, "vertex count " + std::to_string(n) +
                                                    " out of supported range");
            }
            doc.n = static_cast<int>(n);
            doc.declared_edges = m;
            have_problem = true;
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_problem) {
                throw DimacsParseError(line_no, "edge before problem line");
            }
            if (tokens.size() != 3) {
                throw DimacsParseError(line_no, "edge line is not 'e <u> <v>'");
            }
            const long long u = parse_int(tokens[1], line_no, "endpoint");
            const long long v = parse_int(tokens[2], line_no, "endpoint");
            if (u < 1 || u > doc.n || v < 1 || v > doc.n) {
                throw DimacsParseError(line_no, "endpoint outside 1.." + std::to_string(doc.n));
            }
            doc.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            continue;
        }
        throw DimacsParseError(line_no, "unrecognized directive '" + std::string(tokens[0]) + "'");
    }

    if (!have_problem) {
        throw DimacsParseError(line_no == 0 ? 1 : line_no, "missing problem line");
    }

    std::vector<std::pair<Vertex, Vertex>> zero_based;
    zero_based.reserve(doc.edges.size());
    for (const auto& [u, v] : doc.edges) zero_based.emplace_back(u - 1, v - 1);

    ParsedDimacs out;
    EdgeDrops drops;
    out.graph = Graph::from_edges(doc.n, zero_based, &drops);
    doc.anomalies.duplicate_edges = drops.duplicates;
    doc.anomalies.self_loops = drops.self_loops;
    doc.anomalies.declared_edge_delta =
        static_cast<long long>(out.graph.edge_count()) - doc.declared_edges;
    out.document = std::move(doc);
    return out;
}

ParsedDimacs parse_dimacs_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dimacs(buffer.str());
}

std::string write_dimacs(const Graph& g, std::span<const std::string> comments) {
    std::string out;
    for (const auto& comment : comments) {
        out += "c ";
        out += comment;
        out += '\n';
    }
    const int n = g.vertex_count();
    out += "p edge " + std::to_string(n) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) {
                out += "e " + std::to_string(u + 1) + ' ' + std::to_string(v + 1) + '\n';
            }
        }
    }
    return out;
}

void write_dimacs_file(const std::filesystem::path& path, const Graph& g,
                       std::span<const std::string> comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << write_dimacs(g, comments);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace vclique
