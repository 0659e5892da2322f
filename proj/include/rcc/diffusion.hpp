#pragma once
#include "rcc/graph.hpp"
#include "rcc/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rcc {

enum class SeedStrategy { innermost_core, top_degree, top_closeness, top_betweenness, random_set };

std::string seed_strategy_name(SeedStrategy s);
std::optional<SeedStrategy> seed_strategy_from_name(const std::string& s);

// Deterministic per (strategy, s, seed). The innermost-core strategy draws
// from the max-core shell by descending degree, padding from the next shells
// when the shell is smaller than s.
std::vector<VertexId> select_seeds(const Graph& g, SeedStrategy strategy, std::size_t s,
                                   std::uint64_t seed);

struct SpreadResult {
    std::string strategy;
    std::size_t seed_size = 0;
    std::vector<std::size_t> informed_curve; // informed count per step, step 0 = seeds
    std::size_t reachable = 0;               // size of the closure of the seed set
    std::size_t unreachable = 0;
    // first step t >= 1 with informed >= ceil(f * reachable)
    std::map<double, std::size_t> steps_to_fraction;
    // same thresholds against the full vertex count; absent when unreachable
    std::map<double, std::optional<std::size_t>> steps_to_fraction_total;
};

// Synchronous flood broadcast: every informed vertex informs its whole
// neighborhood each round.
SpreadResult flood_spread(const Graph& g, const std::vector<VertexId>& seeds);

} // namespace rcc
