#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vclique/solver.hpp"

namespace vclique::bench {

/// One line of benchmark output. Mean rows (status "mean") carry averages,
/// so the numeric fields are doubles; instance rows hold exact integers.
struct BenchRow {
    std::string instance;
    int n = 0;
    double density = 0.0;
    std::string mode;
    std::string status;
    double size = 0.0;
    double seconds = 0.0;
    double combinations = 0.0;
    double isclique_calls = 0.0;
    double iterations = 0.0;
};

inline constexpr const char* kCsvHeader =
    "instance,n,density,mode,status,size,seconds,combinations,isclique_calls,iterations";

struct GridCell {
    int n = 0;
    double density = 0.0;
};

struct SuiteOptions {
    SolverConfig solver;
    int jobs = 1;
    int seeds_per_cell = 8;
    std::uint64_t base_seed = 1;
};

/// The stock random-suite grid: n in {100,200,300,500} with two densities
/// each, the classic random-graph benchmark layout.
std::vector<GridCell> default_random_grid();

/// Solves seeds_per_cell G(n,p) draws per grid cell. Instance seeds are
/// base_seed + 1000003 * cell_index + repeat, so runs are reproducible.
/// After each cell's rows a mean row (status "mean") is appended. Row order
/// is by cell then repeat, regardless of worker completion order.
std::vector<BenchRow> run_random_suite(const std::vector<GridCell>& grid,
                                       const SuiteOptions& options);

/// Solves every *.clq file in `dir`, sorted by name. A file that cannot be
/// read or parsed produces a row with status "error" and the run continues.
std::vector<BenchRow> run_dimacs_suite(const std::filesystem::path& dir,
                                       const SuiteOptions& options);

std::string to_csv(const std::vector<BenchRow>& rows);

const char* mode_name(EnumerationMode mode);
const char* status_name(SolveStatus status);

/// Row for one finished solve; shared by the suites and the CLI.
BenchRow row_from_result(std::string instance, int n, double density,
                         EnumerationMode mode, const SolveResult& result);

}  // namespace vclique::bench
