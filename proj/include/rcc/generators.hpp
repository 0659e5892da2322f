#pragma once
#include "rcc/graph.hpp"
#include "rcc/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rcc {

// Each pair linked independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

struct ConfigModelReport {
    bool stub_adjusted = false; // odd degree sum fixed by one stub
    std::size_t loops_dropped = 0;
    std::size_t multi_dropped = 0;
};

// Degrees sampled from p(k) ~ k^-exponent for k >= k_min, wired by the
// configuration model, then simplified.
Graph powerlaw_config(std::size_t n, double exponent, int k_min, std::uint64_t seed,
                      ConfigModelReport* report = nullptr);

// Central hub clique; each satellite clique attaches through
// links_per_satellite edges from distinct satellite vertices to distinct hub
// vertices.
Graph clique_star(std::size_t hub_size, std::size_t satellite_count, std::size_t satellite_size,
                  std::size_t links_per_satellite, std::uint64_t seed);

// Cliques arranged in a ring. Every clique designates one gateway vertex;
// the gateway of clique i carries the inter_edges edges to distinct random
// members of clique i+1.
Graph ring_of_cliques(const std::vector<std::size_t>& sizes, std::size_t inter_edges,
                      std::uint64_t seed);

struct GeneratorSpec {
    std::string family; // erdos-renyi | powerlaw-config | clique-star | ring-of-cliques
    std::size_t n = 0;
    double p = 0.0;
    double exponent = 0.0;
    int k_min = 1;
    std::size_t hub_size = 0, satellite_count = 0, satellite_size = 0, links_per_satellite = 1;
    std::vector<std::size_t> sizes;
    std::size_t inter_edges = 1;
    std::uint64_t rng_seed = 0;
};

Graph generate(const GeneratorSpec& spec);
std::string generator_spec_json(const GeneratorSpec& spec);

} // namespace rcc
