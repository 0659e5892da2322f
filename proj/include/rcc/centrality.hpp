#pragma once
#include "rcc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rcc {

enum class Metric { degree, closeness, betweenness };

std::string metric_name(Metric m);
std::optional<Metric> metric_from_name(const std::string& s);

// C(v) = 1 / sum of hop distances to the vertices reachable from v.
// Isolated vertices get 0.
std::vector<double> closeness(const Graph& g);
std::vector<double> closeness_serial(const Graph& g);

// Brandes accumulation over unordered pairs, endpoints excluded,
// unnormalized.
std::vector<double> betweenness(const Graph& g);
std::vector<double> betweenness_serial(const Graph& g);

std::vector<double> degree_centrality(const Graph& g);

std::vector<double> centrality(const Graph& g, Metric m);

// k highest-valued vertices, ties broken by ascending id; sorted by rank.
std::vector<VertexId> top_k(const std::vector<double>& values, std::size_t k);

// |a n b| / |a u b| over vertex sets; 1.0 when both are empty.
double jaccard_overlap(std::vector<VertexId> a, std::vector<VertexId> b);

// Kendall tau-b over paired rank/score vectors (same index = same item).
// Undefined for fewer than two items or when one side is all ties.
std::optional<double> kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

} // namespace rcc
