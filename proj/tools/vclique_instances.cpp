// Writes the regenerable classic clique benchmarks (johnson, hamming,
// c-fat rings, MANN_a9, keller4) as DIMACS .clq files, for feeding the
// `bench --suite dimacs` and `solve` commands.
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vclique/dimacs.hpp"
#include "vclique/instances.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Write the regenerable classic clique benchmark instances"};
    std::string out_dir = ".";
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::filesystem::create_directories(out_dir);
    for (const auto& inst : vclique::instances::named_instances()) {
        const vclique::Graph g = inst.build();
        if (g.vertex_count() != inst.expected_n ||
            g.edge_count() != static_cast<std::uint64_t>(inst.expected_m)) {
            std::fprintf(stderr, "error: %s built with n=%d m=%llu, expected n=%d m=%lld\n",
                         inst.name.c_str(), g.vertex_count(),
                         static_cast<unsigned long long>(g.edge_count()), inst.expected_n,
                         inst.expected_m);
            return 1;
        }
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / (inst.name + ".clq");
        const std::vector<std::string> comments = {inst.name + " (regenerated)"};
        vclique::write_dimacs_file(path, g, comments);
        std::printf("wrote %s (n=%d m=%lld)\n", path.string().c_str(), inst.expected_n,
                    inst.expected_m);
    }
    return 0;
}
