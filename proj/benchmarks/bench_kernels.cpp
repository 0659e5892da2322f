// Serial vs OpenMP kernel timings on generated graphs.
#include "rcc/centrality.hpp"
#include "rcc/core_decomp.hpp"
#include "rcc/generators.hpp"
#include "rcc/graph.hpp"
#include "rcc/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <omp.h>

using namespace rcc;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn, int reps = 3) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 4000;
    std::printf("threads: %d\n", omp_get_max_threads());

    Graph pl = powerlaw_config(n, 2.3, 1, 7);
    std::printf("power-law graph: n=%zu m=%zu\n", pl.node_count(), pl.edge_count());
    Graph star = clique_star(40, 120, 8, 2, 7);
    std::printf("clique-star graph: n=%zu m=%zu\n\n", star.node_count(), star.edge_count());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    std::vector<double> sink;
    row("closeness", time_of([&] { sink = closeness_serial(pl); }),
        time_of([&] { sink = closeness(pl); }));
    row("betweenness", time_of([&] { sink = betweenness_serial(pl); }),
        time_of([&] { sink = betweenness(pl); }));
    ClusteringResult cr;
    row("clustering", time_of([&] { cr = clustering_coefficient_serial(pl); }),
        time_of([&] { cr = clustering_coefficient(pl); }));

    auto d = core_numbers(star);
    ShellEigengapProfile prof;
    row("shell eigengap profile", time_of([&] { prof = shell_eigengap_profile_serial(star, d); }),
        time_of([&] { prof = shell_eigengap_profile(star, d); }));
    return 0;
}
