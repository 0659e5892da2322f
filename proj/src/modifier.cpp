#include "rcc/modifier.hpp"
#include "rcc/centrality.hpp"
#include "rcc/rng.hpp"

#include <algorithm>

namespace rcc {

std::pair<Graph, ModificationPlan> modify_rcc(const Graph& g, std::size_t h, double gamma,
                                              ModifyMode mode, std::uint64_t seed) {
    if (h < 2) throw Error("modify_rcc: h must be >= 2");
    if (h > g.node_count()) throw Error("modify_rcc: h exceeds vertex count");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw Error("modify_rcc: gamma must be in (0,1]");

    ModificationPlan plan;
    plan.h = h;
    plan.gamma = gamma;
    plan.mode = mode;
    plan.rng_seed = seed;
    plan.top_vertices = top_k(degree_centrality(g), h);
    std::vector<VertexId> top = plan.top_vertices;
    std::sort(top.begin(), top.end());

    std::vector<std::pair<VertexId, VertexId>> candidates;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j) {
            bool present = g.has_edge(top[i], top[j]);
            if ((mode == ModifyMode::insert) != present) candidates.emplace_back(top[i], top[j]);
        }
    plan.candidate_count = candidates.size();
    auto n_pick = static_cast<std::size_t>(gamma * static_cast<double>(candidates.size()));
    if (candidates.empty() || n_pick == 0) {
        plan.noop = candidates.empty();
        if (!plan.noop) plan.chosen.clear();
    }
    if (plan.noop || n_pick == 0) return {g, plan};

    Rng rng(seed);
    auto pick = rng.sample_indices(candidates.size(), n_pick);
    for (std::size_t i : pick) plan.chosen.push_back(candidates[i]);
    std::sort(plan.chosen.begin(), plan.chosen.end());

    auto edges = g.edges();
    if (mode == ModifyMode::insert) {
        edges.insert(edges.end(), plan.chosen.begin(), plan.chosen.end());
    } else {
        std::vector<std::pair<VertexId, VertexId>> keep;
        keep.reserve(edges.size());
        std::size_t ci = 0;
        std::sort(edges.begin(), edges.end());
        for (const auto& e : edges) {
            while (ci < plan.chosen.size() && plan.chosen[ci] < e) ++ci;
            if (ci < plan.chosen.size() && plan.chosen[ci] == e) continue;
            keep.push_back(e);
        }
        edges = std::move(keep);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(g.node_count());
        for (VertexId v = 0; v < g.node_count(); ++v) labels.push_back(g.label(v));
    }
    Graph out = Graph::from_edges(g.node_count(), std::move(edges), std::move(labels));
    return {out, plan};
}

} // namespace rcc
