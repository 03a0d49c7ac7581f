#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "support.hpp"
#include "vclique/bench.hpp"
#include "vclique/dimacs.hpp"
#include "vclique/instances.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

std::string cli_path() {
    const char* env = std::getenv("VCLIQUE_CLI");
    REQUIRE_MESSAGE(env != nullptr, "VCLIQUE_CLI must point at the CLI binary");
    return env;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) r.output += buf;
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "vclique_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("solve prints the exact report line for a triangle") {
    TempDir dir;
    const fs::path file = dir.path / "triangle.clq";
    vclique::write_dimacs_file(file, support::complete(3));

    const RunResult r = run_cli("solve " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("The size of the maximum clique: 3. "
                        "The nodes of this clique are: 1 2 3\n") != std::string::npos);
    CHECK(r.output.find("status=exact") != std::string::npos);
    CHECK(r.output.find("mode=pruned") != std::string::npos);
}

TEST_CASE("solve reports budget exhaustion with a distinct exit code and best-so-far") {
    TempDir dir;
    const fs::path file = dir.path / "k10.clq";
    vclique::write_dimacs_file(file, support::complete(10));

    const RunResult r = run_cli("solve " + file.string() + " --mode naive --max-combinations 2");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("Best clique within budget: 8.") != std::string::npos);
    CHECK(r.output.find("status=budget_exhausted") != std::string::npos);
}

TEST_CASE("solve rejects malformed input with a located message and exit 1") {
    TempDir dir;
    const fs::path file = dir.path / "broken.clq";
    {
        std::ofstream out(file);
        out << "p edge 3 1\ne 1 9\n";
    }
    const RunResult r = run_cli("solve " + file.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("line 2") != std::string::npos);

    const RunResult missing = run_cli("solve " + (dir.path / "nope.clq").string());
    CHECK(missing.exit_code == 1);
}

TEST_CASE("gen emits byte-identical canonical files and K4 at p=1") {
    TempDir dir;
    const fs::path a = dir.path / "a.clq";
    const fs::path b = dir.path / "b.clq";
    CHECK(run_cli("gen --n 4 --p 1 --seed 1 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("gen --n 4 --p 1 --seed 1 --out " + b.string()).exit_code == 0);
    CHECK(read_file(a) == read_file(b));

    const vclique::ParsedDimacs parsed = vclique::parse_dimacs_file(a);
    CHECK(parsed.graph.vertex_count() == 4);
    CHECK(parsed.graph.edge_count() == 6);

    // reported edge count matches what the file parses back to
    const fs::path c = dir.path / "c.clq";
    const RunResult gen = run_cli("gen --n 50 --p 0.3 --seed 9 --out " + c.string());
    CHECK(gen.exit_code == 0);
    const auto edge_count = vclique::parse_dimacs_file(c).graph.edge_count();
    CHECK(gen.output.find("edges=" + std::to_string(edge_count)) != std::string::npos);
    CHECK(run_cli("solve " + c.string()).exit_code == 0);

    CHECK(run_cli("gen --n 4 --p 1.5 --seed 1 --out " + a.string()).exit_code == 1);
}

TEST_CASE("verify matches the oracle on C5, K4 minus an edge, and a 50-graph sweep") {
    TempDir dir;
    const fs::path file = dir.path / "c5.clq";
    vclique::write_dimacs_file(file, support::cycle(5));

    const RunResult r = run_cli("verify " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ve=2") != std::string::npos);
    CHECK(r.output.find("brute=2") != std::string::npos);
    CHECK(r.output.find("match") != std::string::npos);

    const fs::path k4e = dir.path / "k4e.clq";
    vclique::write_dimacs_file(
        k4e, support::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    const RunResult bnb = run_cli("verify " + k4e.string() + " --oracle bnb");
    CHECK(bnb.exit_code == 0);
    CHECK(bnb.output.find("ve=3 bnb=3 match") != std::string::npos);

    const RunResult sweep = run_cli("verify --random 20,0.5,50");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.output.find("MISMATCH") == std::string::npos);
    int matches = 0;
    for (std::size_t at = sweep.output.find("match"); at != std::string::npos;
         at = sweep.output.find("match", at + 1)) {
        ++matches;
    }
    CHECK(matches == 50);
}

TEST_CASE("verify falls back to branch and bound past the brute-force guard") {
    TempDir dir;
    const fs::path file = dir.path / "k4e.clq";
    vclique::write_dimacs_file(
        file, support::from_pairs(30, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    const RunResult r = run_cli("verify " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("bnb=4") != std::string::npos);
}

TEST_CASE("bench writes the stable CSV schema") {
    TempDir dir;
    const fs::path csv = dir.path / "out.csv";
    const RunResult r =
        run_cli("bench --suite random --grid 12x0.4 --seeds 2 --csv " + csv.string());
    CHECK(r.exit_code == 0);
    const std::string text = read_file(csv);
    CHECK(text.rfind("instance,n,density,mode,status,size,seconds,combinations,"
                     "isclique_calls,iterations\n", 0) == 0);
    CHECK(text.find("gnp-n12-d0.40-s1") != std::string::npos);
    CHECK(text.find("-mean") != std::string::npos);

    const RunResult missing_dir = run_cli("bench --suite dimacs --csv " + csv.string());
    CHECK(missing_dir.exit_code == 1);
}

TEST_CASE("bench dimacs suite reproduces published sizes on regenerated files") {
    TempDir dir;
    const fs::path clq = dir.path / "clq";
    fs::create_directories(clq);
    for (const auto& inst : vclique::instances::named_instances()) {
        if (inst.name == "johnson8-2-4" || inst.name == "hamming6-4" ||
            inst.name == "MANN_a9") {
            vclique::write_dimacs_file(clq / (inst.name + ".clq"), inst.build());
        }
    }
    const fs::path csv = dir.path / "dimacs.csv";
    const RunResult r =
        run_cli("bench --suite dimacs --dir " + clq.string() + " --csv " + csv.string());
    CHECK(r.exit_code == 0);
    const std::string text = read_file(csv);
    CHECK(text.find("MANN_a9,45,") != std::string::npos);
    CHECK(text.find(",exact,16,") != std::string::npos);   // MANN_a9
    CHECK(text.find("hamming6-4,64,") != std::string::npos);
    CHECK(text.find("johnson8-2-4,28,") != std::string::npos);
    // both 4-cliques appear as exact rows
    int exact4 = 0;
    for (std::size_t at = text.find(",exact,4,"); at != std::string::npos;
         at = text.find(",exact,4,", at + 1)) {
        ++exact4;
    }
    CHECK(exact4 == 2);

    const fs::path empty_dir = dir.path / "empty";
    fs::create_directories(empty_dir);
    const fs::path empty_csv = dir.path / "empty.csv";
    const RunResult empty =
        run_cli("bench --suite dimacs --dir " + empty_dir.string() + " --csv " +
                empty_csv.string());
    CHECK(empty.exit_code == 0);
    CHECK(read_file(empty_csv) ==
          std::string(vclique::bench::kCsvHeader) + "\n");
}

TEST_CASE("solve handles the empty graph") {
    TempDir dir;
    const fs::path file = dir.path / "none.clq";
    {
        std::ofstream out(file);
        out << "p edge 0 0\n";
    }
    const RunResult r = run_cli("solve " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("The size of the maximum clique: 0.") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("solve").exit_code == 1);
    CHECK(run_cli("frobnicate x").exit_code == 1);
}
