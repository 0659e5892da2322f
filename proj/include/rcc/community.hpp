#pragma once
#include "rcc/core_decomp.hpp"
#include "rcc/graph.hpp"

#include <cstdint>
#include <vector>

namespace rcc {

struct Partition {
    std::vector<int> community; // per vertex, dense ids
    int count = 0;
};

// Synchronous label propagation with smallest-label tie-break, followed by a
// connectivity split so each community is internally connected. Community
// ids are dense, ordered by size (largest first).
Partition detect_communities(const Graph& g, std::uint64_t seed);

struct CommunityCoreRow {
    int community = 0;
    std::size_t community_size = 0;
    std::size_t core_members = 0;
};

// Communities holding at least one innermost-core vertex, ordered by size.
std::vector<CommunityCoreRow> core_community_distribution(const Graph& g,
                                                          const CoreDecomposition& d,
                                                          const Partition& p);

struct SuperVertex {
    int id = 0;
    bool is_core = false;
    std::vector<VertexId> members;
    double mean_closeness = 0.0;
    double mean_betweenness = 0.0;
};

struct SuperGraph {
    std::vector<SuperVertex> vertices; // communities first, core supervertex last
    std::vector<std::pair<int, int>> edges;
};

// One supervertex per community (core vertices excluded) plus one for the
// innermost core; supervertices are linked iff any cross edge exists.
SuperGraph supervertex_reduction(const Graph& g, const CoreDecomposition& d, const Partition& p);

} // namespace rcc
