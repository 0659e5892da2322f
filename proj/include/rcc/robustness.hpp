#pragma once
#include "rcc/centrality.hpp"
#include "rcc/graph.hpp"

#include <cstdint>
#include <vector>

namespace rcc {

struct PerturbResult {
    Graph graph;
    std::size_t deleted = 0;
    bool noop = false; // fraction * m rounded below one edge
};

// Deletes floor(fraction * m) uniformly chosen edges; the vertex set is kept.
PerturbResult perturb_edges(const Graph& g, double fraction, std::uint64_t seed);

struct RobustnessResult {
    Metric metric = Metric::closeness;
    double delete_fraction = 0.0;
    std::size_t k = 0;
    std::size_t trials = 0;
    double tau_mean = 0.0;
    double tau_sd = 0.0;
    std::size_t fragmented_trials = 0; // perturbed graph had extra components
};

// For each fraction and trial: perturb, recompute the metric, compare the
// top-k rankings on the union of both top-k sets with Kendall tau-b (vertices
// outside a list rank below every listed one). With giant_only the perturbed
// ranking is recomputed on the largest component alone; such trials are
// counted in fragmented_trials either way.
std::vector<RobustnessResult> robustness_sweep(const Graph& g, Metric metric,
                                               const std::vector<double>& fractions, std::size_t k,
                                               std::size_t trials, std::uint64_t seed,
                                               bool giant_only = false);

// tau-b between two top-k lists over their union; exposed for tests.
double topk_rank_tau(const std::vector<VertexId>& a, const std::vector<VertexId>& b, std::size_t k);

} // namespace rcc
