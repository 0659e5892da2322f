#pragma once
#include "rcc/graph.hpp"

#include <optional>
#include <vector>

namespace rcc {

struct CoreDecomposition {
    std::vector<int> core_number; // per vertex
    int max_core = 0;

    // shell k as a sorted vertex set; empty unless 0 <= k <= max_core
    std::vector<VertexId> shell(int k) const;
    // non-empty shell indices, innermost (largest k) first
    std::vector<int> shell_indices() const;
};

// Bucket-based peeling, O(m).
CoreDecomposition core_numbers(const Graph& g);

// C_k = {v : core(v) >= k}; empty when k > max_core.
std::vector<VertexId> k_core(const CoreDecomposition& d, int k);

struct ShellSubgraph {
    int shell_index = 0;
    std::vector<VertexId> members; // shell k plus all its neighbors, sorted
    Graph graph;                   // induced subgraph over members
    std::size_t n_k = 0;
    double d_k = 0.0; // 2 m(S_k) / n_k
};

// Induced subgraph over shell-k vertices and their neighbors. Throws on an
// empty shell.
ShellSubgraph shell_subgraph(const Graph& g, const CoreDecomposition& d, int k);

struct ShellBuckets {
    // shell indices per bucket, innermost-first ordering
    std::vector<int> inner, mid, outer;
    bool degenerate = false; // fewer than 3 non-empty shells
};

// Non-empty shells ordered innermost-first; first ceil(25%) -> inner, next
// ceil(25%) -> mid, remainder -> outer.
ShellBuckets shell_buckets(const CoreDecomposition& d);

} // namespace rcc
