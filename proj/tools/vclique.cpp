#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vclique/bench.hpp"
#include "vclique/dimacs.hpp"
#include "vclique/gnp.hpp"
#include "vclique/oracle.hpp"
#include "vclique/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;        // unreadable input, parse failure, bad flags
constexpr int kExitNotExact = 2;     // solve: budget exhausted; verify: mismatch

constexpr std::uint64_t kDefaultSolveBudget = 100'000'000;  // subsets per solve

struct BudgetFlags {
    std::uint64_t max_combinations = kDefaultSolveBudget;
    bool unlimited = false;
    double time_limit = 0.0;  // seconds; 0 = none

    void attach(CLI::App& cmd) {
        cmd.add_option("--max-combinations", max_combinations,
                       "Stop after examining this many candidate subsets")
            ->capture_default_str();
        cmd.add_flag("--unlimited", unlimited, "Remove the combination budget");
        cmd.add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
    }

    void apply(vclique::SolverConfig& cfg) const {
        if (!unlimited) cfg.combination_budget = max_combinations;
        if (time_limit > 0.0) cfg.time_budget_seconds = time_limit;
    }
};

vclique::EnumerationMode parse_mode(const std::string& name) {
    if (name == "naive") return vclique::EnumerationMode::naive;
    if (name == "pruned") return vclique::EnumerationMode::pruned;
    throw CLI::ValidationError("--mode", "must be 'naive' or 'pruned'");
}

void report_anomalies(const vclique::DimacsDocument& doc) {
    const auto& a = doc.anomalies;
    if (a.duplicate_edges || a.self_loops) {
        std::fprintf(stderr, "note: dropped %" PRIu64 " duplicate edge(s), %" PRIu64
                             " self-loop(s)\n",
                     a.duplicate_edges, a.self_loops);
    }
    if (a.declared_edge_delta != 0) {
        std::fprintf(stderr, "note: declared edge count off by %+lld\n",
                     a.declared_edge_delta);
    }
}

std::string clique_report_line(const std::string& prefix, const vclique::Clique& clique) {
    std::string line = prefix + std::to_string(clique.size()) +
                       ". The nodes of this clique are:";
    for (vclique::Vertex v : clique.members()) line += ' ' + std::to_string(v + 1);
    return line;
}

void print_stats(const vclique::SolveResult& result, vclique::EnumerationMode mode,
                 const vclique::Graph& g) {
    std::printf("stats: status=%s size=%d seconds=%.6f combinations=%" PRIu64
                " isclique_calls=%" PRIu64 " iterations=%" PRIu64
                " adjacency_probes=%" PRIu64 " mode=%s n=%d edges=%" PRIu64 "\n",
                vclique::bench::status_name(result.status), result.size(),
                result.stats.elapsed_seconds, result.stats.combinations_enumerated,
                result.stats.isclique_calls, result.stats.iterations,
                result.stats.adjacency_probes, vclique::bench::mode_name(mode),
                g.vertex_count(), g.edge_count());
}

int cmd_solve(const std::string& path, vclique::EnumerationMode mode,
              const BudgetFlags& budget) {
    vclique::ParsedDimacs parsed = vclique::parse_dimacs_file(path);
    report_anomalies(parsed.document);

    vclique::SolverConfig cfg;
    cfg.mode = mode;
    budget.apply(cfg);
    const vclique::SolveResult result = vclique::find_maximum_clique(parsed.graph, cfg);

    if (result.clique && !parsed.graph.is_clique_subset(result.clique->members())) {
        std::fprintf(stderr, "internal error: result failed clique re-verification\n");
        return kExitError;
    }

    if (result.status == vclique::SolveStatus::exact) {
        const vclique::Clique reported = result.clique ? *result.clique : vclique::Clique{};
        std::printf("%s\n",
                    clique_report_line("The size of the maximum clique: ", reported).c_str());
        print_stats(result, mode, parsed.graph);
        return kExitOk;
    }
    if (result.clique) {
        std::printf("%s\n", clique_report_line("Best clique within budget: ",
                                               *result.clique).c_str());
    } else {
        std::printf("No clique found within budget.\n");
    }
    print_stats(result, mode, parsed.graph);
    return kExitNotExact;
}

int cmd_gen(int n, double p, std::uint64_t seed, const std::string& out) {
    const vclique::Graph g = vclique::gen_gnp({n, p, seed});
    char comment[96];
    std::snprintf(comment, sizeof comment, "gnp n=%d p=%.6f seed=%llu", n, p,
                  static_cast<unsigned long long>(seed));
    const std::vector<std::string> comments = {comment};
    vclique::write_dimacs_file(out, g, comments);
    std::printf("wrote %s: n=%d edges=%" PRIu64 "\n", out.c_str(), g.vertex_count(),
                g.edge_count());
    return kExitOk;
}

std::vector<vclique::bench::GridCell> parse_grid(const std::string& spec) {
    std::vector<vclique::bench::GridCell> grid;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        const std::string item =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? spec.size() : comma + 1;
        const std::size_t x = item.find('x');
        if (x == std::string::npos) {
            throw CLI::ValidationError("--grid", "cell '" + item + "' is not '<n>x<density>'");
        }
        try {
            grid.push_back({std::stoi(item.substr(0, x)), std::stod(item.substr(x + 1))});
        } catch (const std::exception&) {
            throw CLI::ValidationError("--grid", "cell '" + item + "' is not '<n>x<density>'");
        }
    }
    if (grid.empty()) throw CLI::ValidationError("--grid", "no cells");
    return grid;
}

int cmd_bench(const std::string& suite, const std::string& grid_spec, int seeds,
              const std::string& dir, const std::string& csv_path, int jobs,
              vclique::EnumerationMode mode, const BudgetFlags& budget) {
    vclique::bench::SuiteOptions options;
    options.solver.mode = mode;
    budget.apply(options.solver);
    options.jobs = jobs;
    options.seeds_per_cell = seeds;

    std::vector<vclique::bench::BenchRow> rows;
    if (suite == "random") {
        const auto grid = grid_spec.empty() ? vclique::bench::default_random_grid()
                                            : parse_grid(grid_spec);
        rows = vclique::bench::run_random_suite(grid, options);
    } else if (suite == "dimacs") {
        if (dir.empty()) throw CLI::ValidationError("--dir", "required for the dimacs suite");
        rows = vclique::bench::run_dimacs_suite(dir, options);
    } else {
        throw CLI::ValidationError("--suite", "must be 'random' or 'dimacs'");
    }

    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot open '%s' for writing\n", csv_path.c_str());
        return kExitError;
    }
    out << vclique::bench::to_csv(rows);
    out.close();
    std::printf("wrote %zu row(s) to %s\n", rows.size(), csv_path.c_str());
    return kExitOk;
}

struct VerifyOutcome {
    bool ran = false;
    bool all_match = true;
};

void verify_one(const std::string& name, const vclique::Graph& g,
                const vclique::SolverConfig& cfg, const std::string& oracle_choice,
                VerifyOutcome& outcome) {
    outcome.ran = true;
    const vclique::SolveResult solved = vclique::find_maximum_clique(g, cfg);
    if (solved.status != vclique::SolveStatus::exact) {
        std::printf("%s: solver budget exhausted at size %d; no verdict\n", name.c_str(),
                    solved.size());
        outcome.all_match = false;
        return;
    }

    std::string oracle = oracle_choice;
    if (oracle == "auto") {
        oracle = g.vertex_count() <= vclique::kBruteForceMaxVertices ? "brute" : "bnb";
    }
    int oracle_size = 0;
    if (oracle == "brute") {
        oracle_size = vclique::brute_force_max_clique(g).clique.size();
    } else {
        oracle_size = vclique::branch_and_bound_max_clique(g).clique.size();
    }

    const bool match = solved.size() == oracle_size;
    std::printf("%s: ve=%d %s=%d %s\n", name.c_str(), solved.size(), oracle.c_str(),
                oracle_size, match ? "match" : "MISMATCH");
    if (!match) outcome.all_match = false;
}

int cmd_verify(const std::string& path, const std::string& random_spec,
               vclique::EnumerationMode mode, const BudgetFlags& budget,
               const std::string& oracle_choice) {
    vclique::SolverConfig cfg;
    cfg.mode = mode;
    budget.apply(cfg);

    VerifyOutcome outcome;
    if (!random_spec.empty()) {
        // n,p,seeds — e.g. 20,0.5,50
        int n = 0, seeds = 0;
        double p = 0.0;
        if (std::sscanf(random_spec.c_str(), "%d,%lf,%d", &n, &p, &seeds) != 3 || seeds < 1) {
            throw CLI::ValidationError("--random", "expected '<n>,<p>,<seeds>'");
        }
        for (int s = 1; s <= seeds; ++s) {
            char name[64];
            std::snprintf(name, sizeof name, "gnp-n%d-p%.2f-s%d", n, p, s);
            verify_one(name, vclique::gen_gnp({n, p, static_cast<std::uint64_t>(s)}), cfg,
                       oracle_choice, outcome);
        }
    } else {
        const vclique::ParsedDimacs parsed = vclique::parse_dimacs_file(path);
        report_anomalies(parsed.document);
        verify_one(std::filesystem::path(path).stem().string(), parsed.graph, cfg,
                   oracle_choice, outcome);
    }
    if (!outcome.ran) return kExitError;
    return outcome.all_match ? kExitOk : kExitNotExact;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maximum-clique tools: degree-threshold binary search with "
                 "combination verification, plus generators and benchmarks"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one DIMACS .clq instance");
    std::string solve_path;
    std::string solve_mode = "pruned";
    BudgetFlags solve_budget;
    solve->add_option("file", solve_path, "DIMACS clique file")->required();
    solve->add_option("--mode", solve_mode, "Enumeration mode: naive|pruned")
        ->capture_default_str();
    solve_budget.attach(*solve);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a G(n,p) instance as DIMACS");
    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Vertex count")->required();
    gen->add_option("--p", gen_p, "Edge probability in [0,1]")->required();
    gen->add_option("--seed", gen_seed, "Generator seed")->required();
    gen->add_option("--out", gen_out, "Output file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite, emitting CSV");
    std::string bench_suite;
    std::string bench_grid;
    std::string bench_dir;
    std::string bench_csv;
    std::string bench_mode = "pruned";
    int bench_seeds = 8;
    int bench_jobs = 1;
    BudgetFlags bench_budget;
    bench_budget.unlimited = true;  // suites default to exhaustive solves
    bench->add_option("--suite", bench_suite, "random|dimacs")->required();
    bench->add_option("--grid", bench_grid,
                      "Random-suite cells '<n>x<d>,...' (default: stock grid)");
    bench->add_option("--seeds", bench_seeds, "Random graphs per cell")->capture_default_str();
    bench->add_option("--dir", bench_dir, "Directory of .clq files (dimacs suite)");
    bench->add_option("--csv", bench_csv, "CSV output path")->required();
    bench->add_option("--jobs", bench_jobs, "Parallel workers")->capture_default_str();
    bench->add_option("--mode", bench_mode, "Enumeration mode: naive|pruned")
        ->capture_default_str();
    bench_budget.attach(*bench);

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check the solver against an oracle");
    std::string verify_path;
    std::string verify_random;
    std::string verify_mode = "pruned";
    std::string verify_oracle = "auto";
    BudgetFlags verify_budget;
    verify_budget.unlimited = true;
    verify->add_option("file", verify_path, "DIMACS clique file");
    verify->add_option("--random", verify_random, "Sweep spec '<n>,<p>,<seeds>'");
    verify->add_option("--mode", verify_mode, "Enumeration mode: naive|pruned")
        ->capture_default_str();
    verify->add_option("--oracle", verify_oracle, "auto|brute|bnb")->capture_default_str();
    verify_budget.attach(*verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(solve_path, parse_mode(solve_mode), solve_budget);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_n, gen_p, gen_seed, gen_out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_suite, bench_grid, bench_seeds, bench_dir, bench_csv,
                             bench_jobs, parse_mode(bench_mode), bench_budget);
        }
        if (verify->parsed()) {
            if (verify_path.empty() && verify_random.empty()) {
                std::fprintf(stderr, "error: verify needs a file or --random\n");
                return kExitError;
            }
            return cmd_verify(verify_path, verify_random, parse_mode(verify_mode),
                              verify_budget, verify_oracle);
        }
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitError;
}
