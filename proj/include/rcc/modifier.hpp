#pragma once
#include "rcc/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rcc {

enum class ModifyMode { insert, remove };

struct ModificationPlan {
    std::size_t h = 0;
    double gamma = 0.0;
    ModifyMode mode = ModifyMode::insert;
    std::uint64_t rng_seed = 0;
    std::vector<VertexId> top_vertices;                  // the h distinct endpoints
    std::vector<std::pair<VertexId, VertexId>> chosen;   // E_f, canonical order
    std::size_t candidate_count = 0;                     // |E_1|
    bool noop = false;                                   // E_1 was empty
};

// Degree ranking is computed once on the input graph (deg desc, id asc).
// Insert: E_1 = absent pairs among the top-h, remove: E_1 = present pairs;
// E_f is a uniform sample of floor(gamma * |E_1|) without replacement.
std::pair<Graph, ModificationPlan> modify_rcc(const Graph& g, std::size_t h, double gamma,
                                              ModifyMode mode, std::uint64_t seed);

} // namespace rcc
