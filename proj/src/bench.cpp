#include "vclique/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "vclique/dimacs.hpp"
#include "vclique/gnp.hpp"

namespace vclique::bench {

namespace {

std::string format_number(double v) {
    char buf[64];
    if (std::abs(v - std::round(v)) < 1e-9) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
    } else {
        std::snprintf(buf, sizeof buf, "%.4f", v);
    }
    return buf;
}

std::string format_density(double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", d);
    return buf;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    return buf;
}

double graph_density(const Graph& g) {
    const long long n = g.vertex_count();
    if (n < 2) return 0.0;
    return 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1));
}

/// Runs tasks 0..count-1 on `jobs` workers; each task owns its output slot.
void run_indexed(int count, int jobs, const std::function<void(int)>& task) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int worker_count = std::min(jobs, count);
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
        });
    }
    for (auto& worker : workers) worker.join();
}

BenchRow mean_row(std::string instance, int n, double density, const std::string& mode,
                  std::vector<BenchRow>::const_iterator first,
                  std::vector<BenchRow>::const_iterator last) {
    BenchRow row;
    row.instance = std::move(instance);
    row.n = n;
    row.density = density;
    row.mode = mode;
    row.status = "mean";
    const double count = static_cast<double>(std::distance(first, last));
    for (auto it = first; it != last; ++it) {
        row.size += it->size;
        row.seconds += it->seconds;
        row.combinations += it->combinations;
        row.isclique_calls += it->isclique_calls;
        row.iterations += it->iterations;
    }
    if (count > 0) {
        row.size /= count;
        row.seconds /= count;
        row.combinations /= count;
        row.isclique_calls /= count;
        row.iterations /= count;
    }
    return row;
}

}  // namespace

const char* mode_name(EnumerationMode mode) {
    return mode == EnumerationMode::naive ? "naive" : "pruned";
}

const char* status_name(SolveStatus status) {
    return status == SolveStatus::exact ? "exact" : "budget_exhausted";
}

BenchRow row_from_result(std::string instance, int n, double density,
                         EnumerationMode mode, const SolveResult& result) {
    BenchRow row;
    row.instance = std::move(instance);
    row.n = n;
    row.density = density;
    row.mode = mode_name(mode);
    row.status = status_name(result.status);
    row.size = result.size();
    row.seconds = result.stats.elapsed_seconds;
    row.combinations = static_cast<double>(result.stats.combinations_enumerated);
    row.isclique_calls = static_cast<double>(result.stats.isclique_calls);
    row.iterations = static_cast<double>(result.stats.iterations);
    return row;
}

std::vector<GridCell> default_random_grid() {
    return {{100, 0.6}, {100, 0.7}, {200, 0.4}, {200, 0.5},
            {300, 0.3}, {300, 0.4}, {500, 0.2}, {500, 0.3}};
}

std::vector<BenchRow> run_random_suite(const std::vector<GridCell>& grid,
                                       const SuiteOptions& options) {
    const int per_cell = std::max(1, options.seeds_per_cell);
    const int cells = static_cast<int>(grid.size());
    const int total = cells * per_cell;
    std::vector<BenchRow> runs(static_cast<std::size_t>(total));

    run_indexed(total, options.jobs, [&](int i) {
        const int cell_index = i / per_cell;
        const int repeat = i % per_cell;
        const GridCell& cell = grid[static_cast<std::size_t>(cell_index)];
        const std::uint64_t seed =
            options.base_seed + 1000003ull * static_cast<std::uint64_t>(cell_index) +
            static_cast<std::uint64_t>(repeat);
        char name[96];
        std::snprintf(name, sizeof name, "gnp-n%d-d%.2f-s%llu", cell.n, cell.density,
                      static_cast<unsigned long long>(seed));
        const Graph g = gen_gnp({cell.n, cell.density, seed});
        const SolveResult result = find_maximum_clique(g, options.solver);
        runs[static_cast<std::size_t>(i)] =
            row_from_result(name, cell.n, cell.density, options.solver.mode, result);
    });

    std::vector<BenchRow> rows;
    rows.reserve(static_cast<std::size_t>(total + cells));
    for (int c = 0; c < cells; ++c) {
        const auto first = runs.begin() + static_cast<std::ptrdiff_t>(c) * per_cell;
        const auto last = first + per_cell;
        rows.insert(rows.end(), first, last);
        char name[96];
        std::snprintf(name, sizeof name, "gnp-n%d-d%.2f-mean", grid[static_cast<std::size_t>(c)].n,
                      grid[static_cast<std::size_t>(c)].density);
        rows.push_back(mean_row(name, grid[static_cast<std::size_t>(c)].n,
                                grid[static_cast<std::size_t>(c)].density,
                                mode_name(options.solver.mode), first, last));
    }
    return rows;
}

std::vector<BenchRow> run_dimacs_suite(const std::filesystem::path& dir,
                                       const SuiteOptions& options) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".clq") {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows(files.size());
    run_indexed(static_cast<int>(files.size()), options.jobs, [&](int i) {
        const auto& path = files[static_cast<std::size_t>(i)];
        BenchRow& row = rows[static_cast<std::size_t>(i)];
        try {
            const ParsedDimacs parsed = parse_dimacs_file(path);
            const SolveResult result = find_maximum_clique(parsed.graph, options.solver);
            row = row_from_result(path.stem().string(), parsed.graph.vertex_count(),
                                  graph_density(parsed.graph), options.solver.mode, result);
        } catch (const std::exception&) {
            row = BenchRow{};
            row.instance = path.stem().string();
            row.mode = mode_name(options.solver.mode);
            row.status = "error";
        }
    });
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& row : rows) {
        out += row.instance;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += format_density(row.density);
        out += ',';
        out += row.mode;
        out += ',';
        out += row.status;
        out += ',';
        out += format_number(row.size);
        out += ',';
        out += format_seconds(row.seconds);
        out += ',';
        out += format_number(row.combinations);
        out += ',';
        out += format_number(row.isclique_calls);
        out += ',';
        out += format_number(row.iterations);
        out += '\n';
    }
    return out;
}

}  // namespace vclique::bench
