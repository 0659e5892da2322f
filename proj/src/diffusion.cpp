#include "rcc/diffusion.hpp"
#include "rcc/centrality.hpp"
#include "rcc/core_decomp.hpp"

#include <algorithm>
#include <cmath>

namespace rcc {

std::string seed_strategy_name(SeedStrategy s) {
    switch (s) {
        case SeedStrategy::innermost_core: return "innermost-core";
        case SeedStrategy::top_degree: return "top-degree";
        case SeedStrategy::top_closeness: return "top-closeness";
        case SeedStrategy::top_betweenness: return "top-betweenness";
        case SeedStrategy::random_set: return "random";
    }
    return "?";
}

std::optional<SeedStrategy> seed_strategy_from_name(const std::string& s) {
    if (s == "innermost-core") return SeedStrategy::innermost_core;
    if (s == "top-degree") return SeedStrategy::top_degree;
    if (s == "top-closeness") return SeedStrategy::top_closeness;
    if (s == "top-betweenness") return SeedStrategy::top_betweenness;
    if (s == "random") return SeedStrategy::random_set;
    return std::nullopt;
}

std::vector<VertexId> select_seeds(const Graph& g, SeedStrategy strategy, std::size_t s,
                                   std::uint64_t seed) {
    if (s == 0) throw Error("select_seeds: seed set size must be positive");
    if (s > g.node_count()) throw Error("select_seeds: seed set exceeds vertex count");
    switch (strategy) {
        case SeedStrategy::top_degree: return top_k(degree_centrality(g), s);
        case SeedStrategy::top_closeness: return top_k(closeness(g), s);
        case SeedStrategy::top_betweenness: return top_k(betweenness(g), s);
        case SeedStrategy::random_set: {
            Rng rng(seed);
            auto idx = rng.sample_indices(g.node_count(), s);
            std::vector<VertexId> out;
            out.reserve(s);
            for (std::size_t i : idx) out.push_back(static_cast<VertexId>(i));
            return out;
        }
        case SeedStrategy::innermost_core: {
            CoreDecomposition d = core_numbers(g);
            // highest-degree members first inside a shell, then id
            std::vector<VertexId> order(g.node_count());
            for (VertexId v = 0; v < g.node_count(); ++v) order[v] = v;
            std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
                if (d.core_number[a] != d.core_number[b])
                    return d.core_number[a] > d.core_number[b];
                if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                return a < b;
            });
            order.resize(s);
            return order;
        }
    }
    throw Error("select_seeds: unknown strategy");
}

SpreadResult flood_spread(const Graph& g, const std::vector<VertexId>& seeds) {
    if (seeds.empty()) throw Error("flood_spread: seed set is empty");
    SpreadResult r;
    r.seed_size = seeds.size();
    std::size_t n = g.node_count();
    std::vector<char> informed(n, 0);
    std::vector<VertexId> frontier;
    for (VertexId v : seeds)
        if (!informed[v]) {
            informed[v] = 1;
            frontier.push_back(v);
        }
    std::size_t count = frontier.size();
    r.informed_curve.push_back(count);
    while (!frontier.empty()) {
        std::vector<VertexId> next;
        for (VertexId u : frontier)
            for (VertexId w : g.neighbors(u))
                if (!informed[w]) {
                    informed[w] = 1;
                    next.push_back(w);
                }
        if (next.empty()) break;
        count += next.size();
        r.informed_curve.push_back(count);
        frontier = std::move(next);
    }
    r.reachable = count;
    r.unreachable = n - count;

    const double fracs[] = {0.25, 0.5, 0.75, 1.0};
    auto first_step = [&](std::size_t threshold) -> std::optional<std::size_t> {
        for (std::size_t t = 1; t < r.informed_curve.size(); ++t)
            if (r.informed_curve[t] >= threshold) return t;
        if (r.informed_curve.size() == 1 && r.informed_curve[0] >= threshold) return 1;
        return std::nullopt;
    };
    for (double f : fracs) {
        auto thr = static_cast<std::size_t>(std::ceil(f * static_cast<double>(r.reachable)));
        if (auto t = first_step(thr)) r.steps_to_fraction[f] = *t;
        auto thr_total = static_cast<std::size_t>(std::ceil(f * static_cast<double>(n)));
        r.steps_to_fraction_total[f] = first_step(thr_total);
    }
    return r;
}

} // namespace rcc
