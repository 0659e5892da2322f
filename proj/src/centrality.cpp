#include "rcc/centrality.hpp"
#include "rcc/core_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>

namespace rcc {

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::degree: return "degree";
        case Metric::closeness: return "closeness";
        case Metric::betweenness: return "betweenness";
    }
    return "?";
}

std::optional<Metric> metric_from_name(const std::string& s) {
    if (s == "degree") return Metric::degree;
    if (s == "closeness") return Metric::closeness;
    if (s == "betweenness") return Metric::betweenness;
    return std::nullopt;
}

namespace {

// distance sum from one source; -1 entries in dist are untouched vertices
std::uint64_t bfs_distance_sum(const Graph& g, VertexId s, std::vector<int>& dist,
                               std::vector<VertexId>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    std::uint64_t sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                sum += static_cast<std::uint64_t>(dist[w]);
                queue.push_back(w);
            }
        }
    }
    return sum;
}

} // namespace

std::vector<double> closeness_serial(const Graph& g) {
    std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    std::vector<int> dist(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        std::uint64_t s = bfs_distance_sum(g, v, dist, queue);
        out[v] = s > 0 ? 1.0 / static_cast<double>(s) : 0.0;
    }
    return out;
}

std::vector<double> closeness(const Graph& g) {
    std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
#pragma omp parallel
    {
        std::vector<int> dist(n);
        std::vector<VertexId> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
            std::uint64_t s = bfs_distance_sum(g, static_cast<VertexId>(v), dist, queue);
            out[v] = s > 0 ? 1.0 / static_cast<double>(s) : 0.0;
        }
    }
    return out;
}

namespace {

// one Brandes pass from source s, adding dependencies into acc
void brandes_source(const Graph& g, VertexId s, std::vector<double>& acc,
                    std::vector<int>& dist, std::vector<double>& sigma,
                    std::vector<double>& delta, std::vector<VertexId>& order) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId u = order[head];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        VertexId w = order[i];
        for (VertexId u : g.neighbors(w))
            if (dist[u] == dist[w] - 1) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
        acc[w] += delta[w];
    }
}

} // namespace

std::vector<double> betweenness_serial(const Graph& g) {
    std::size_t n = g.node_count();
    std::vector<double> acc(n, 0.0);
    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<VertexId> order;
    order.reserve(n);
    for (VertexId s = 0; s < n; ++s) brandes_source(g, s, acc, dist, sigma, delta, order);
    for (double& x : acc) x *= 0.5; // unordered pairs
    return acc;
}

std::vector<double> betweenness(const Graph& g) {
    std::size_t n = g.node_count();
    if (n == 0) return {};
    // Sources are grouped into fixed chunks; each chunk accumulates its own
    // partial vector serially and partials are reduced in chunk order, so the
    // result does not depend on the thread count.
    std::size_t chunk = std::max<std::size_t>(64, n / 256);
    std::size_t n_chunks = (n + chunk - 1) / chunk;
    std::vector<std::vector<double>> partial(n_chunks);
#pragma omp parallel
    {
        std::vector<int> dist(n);
        std::vector<double> sigma(n), delta(n);
        std::vector<VertexId> order;
        order.reserve(n);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c) {
            auto& acc = partial[c];
            acc.assign(n, 0.0);
            std::size_t lo = static_cast<std::size_t>(c) * chunk;
            std::size_t hi = std::min(n, lo + chunk);
            for (std::size_t s = lo; s < hi; ++s)
                brandes_source(g, static_cast<VertexId>(s), acc, dist, sigma, delta, order);
        }
    }
    std::vector<double> acc(n, 0.0);
    for (const auto& p : partial)
        for (std::size_t v = 0; v < n; ++v) acc[v] += p[v];
    for (double& x : acc) x *= 0.5;
    return acc;
}

std::vector<double> degree_centrality(const Graph& g) {
    std::vector<double> out(g.node_count());
    for (VertexId v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
    return out;
}

std::vector<double> centrality(const Graph& g, Metric m) {
    switch (m) {
        case Metric::degree: return degree_centrality(g);
        case Metric::closeness: return closeness(g);
        case Metric::betweenness: return betweenness(g);
    }
    return {};
}

std::vector<VertexId> top_k(const std::vector<double>& values, std::size_t k) {
    if (k > values.size()) throw Error("top_k: k exceeds vertex count");
    std::vector<VertexId> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](VertexId a, VertexId b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });
    idx.resize(k);
    return idx;
}

double jaccard_overlap(std::vector<VertexId> a, std::vector<VertexId> b) {
    if (a.empty() && b.empty()) return 1.0;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    std::size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::optional<double> kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw Error("kendall_tau: size mismatch");
    std::size_t n = x.size();
    if (n < 2) return std::nullopt;
    std::int64_t conc = 0, disc = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double a = x[i] - x[j], b = y[i] - y[j];
            if (a == 0 && b == 0) {
                ++ties_x;
                ++ties_y;
            } else if (a == 0)
                ++ties_x;
            else if (b == 0)
                ++ties_y;
            else if ((a > 0) == (b > 0))
                ++conc;
            else
                ++disc;
        }
    }
    std::int64_t n0 = static_cast<std::int64_t>(n) * (n - 1) / 2;
    double den = std::sqrt(static_cast<double>(n0 - ties_x)) * std::sqrt(static_cast<double>(n0 - ties_y));
    if (den == 0) return std::nullopt;
    return static_cast<double>(conc - disc) / den;
}

GraphStats graph_stats(const Graph& g, int k_min) {
    GraphStats s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();
    s.mean_degree = s.nodes ? 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes) : 0.0;
    s.powerlaw_alpha = powerlaw_fit(g, k_min);
    s.mean_clustering = clustering_coefficient(g).mean;
    auto bc = betweenness(g);
    double norm = s.nodes >= 3
                      ? (static_cast<double>(s.nodes) - 1) * (static_cast<double>(s.nodes) - 2) / 2.0
                      : 1.0;
    double sum = 0;
    for (double x : bc) sum += x / norm;
    s.mean_betweenness = s.nodes ? sum / static_cast<double>(s.nodes) : 0.0;
    s.largest_core_number = core_numbers(g).max_core;
    return s;
}

} // namespace rcc
