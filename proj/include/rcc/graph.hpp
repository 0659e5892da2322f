#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcc {

using VertexId = std::uint32_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};

// Immutable undirected simple graph in CSR form. Vertex ids are dense,
// adjacency rows are sorted, and every edge appears in both rows.
class Graph {
public:
    Graph() = default;

    // Canonicalizes the edge set: drops self-loops, collapses duplicates.
    // Counts of dropped items are retrievable via self_loops()/duplicates().
    static Graph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(VertexId u, VertexId v) const;

    // Sorted canonical edge list (u < v).
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    std::string label(VertexId v) const;
    bool has_labels() const { return !labels_.empty(); }

    std::size_t self_loops_dropped() const { return self_loops_; }
    std::size_t duplicates_dropped() const { return duplicates_; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

// Text edge list: one "u v" pair per line, '#'/'%' comment lines skipped.
// Labels are remapped to dense ids; label order is numeric when every label
// parses as a non-negative integer, lexicographic otherwise, which makes
// loading insensitive to line order.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Deterministic inverse of load: edges emitted with u < v, sorted.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

struct GraphStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::optional<double> powerlaw_alpha; // absent when the fit is degenerate
    double mean_degree = 0.0;
    double mean_clustering = 0.0;
    double mean_betweenness = 0.0; // normalized by (n-1)(n-2)/2
    int largest_core_number = 0;
};

struct ClusteringResult {
    std::vector<double> values;
    double mean = 0.0;
};

ClusteringResult clustering_coefficient(const Graph& g);
ClusteringResult clustering_coefficient_serial(const Graph& g);

// Discrete MLE over degrees >= k_min: alpha = 1 + n / sum ln(k_i/(k_min-0.5)).
// Degenerate tails (every degree equal to k_min) are reported as unfit-able.
std::optional<double> powerlaw_fit(const Graph& g, int k_min = 1);

struct Components {
    std::vector<int> id; // dense from 0, ordered by smallest contained vertex
    int count = 0;
};
Components connected_components(const Graph& g);

GraphStats graph_stats(const Graph& g, int k_min = 1);

// Worker cap for the OpenMP kernels; 0 keeps the runtime default.
void set_threads(int n);
int thread_count();

} // namespace rcc
