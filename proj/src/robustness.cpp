#include "rcc/robustness.hpp"
#include "rcc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rcc {

PerturbResult perturb_edges(const Graph& g, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw Error("perturb_edges: fraction must be in (0,1)");
    auto edges = g.edges(); // canonical order
    auto n_del = static_cast<std::size_t>(fraction * static_cast<double>(edges.size()));
    PerturbResult r;
    if (n_del == 0) {
        r.graph = g;
        r.noop = true;
        return r;
    }
    Rng rng(seed);
    auto kill = rng.sample_indices(edges.size(), n_del);
    std::vector<bool> dead(edges.size(), false);
    for (std::size_t i : kill) dead[i] = true;
    std::vector<std::pair<VertexId, VertexId>> keep;
    keep.reserve(edges.size() - n_del);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!dead[i]) keep.push_back(edges[i]);
    r.graph = Graph::from_edges(g.node_count(), std::move(keep));
    r.deleted = n_del;
    return r;
}

double topk_rank_tau(const std::vector<VertexId>& a, const std::vector<VertexId>& b, std::size_t k) {
    std::set<VertexId> uni(a.begin(), a.end());
    uni.insert(b.begin(), b.end());
    std::vector<double> ra, rb;
    auto rank_in = [k](const std::vector<VertexId>& list, VertexId v) -> double {
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == v) return static_cast<double>(i + 1);
        return static_cast<double>(k + 1); // absent: below every listed vertex
    };
    for (VertexId v : uni) {
        // negated so that "higher rank" sorts like "higher score"
        ra.push_back(-rank_in(a, v));
        rb.push_back(-rank_in(b, v));
    }
    auto tau = kendall_tau(ra, rb);
    return tau.value_or(0.0);
}

namespace {

// perturbed-side ranking: whole graph, or the largest component only with
// everything outside it pushed below the top-k
std::vector<VertexId> perturbed_top_k(const Graph& g, Metric metric, std::size_t k,
                                      bool giant_only) {
    if (!giant_only) return top_k(centrality(g, metric), k);
    Components comps = connected_components(g);
    std::vector<std::size_t> size(static_cast<std::size_t>(comps.count), 0);
    for (VertexId v = 0; v < g.node_count(); ++v) ++size[static_cast<std::size_t>(comps.id[v])];
    int giant = 0;
    for (int c = 1; c < comps.count; ++c)
        if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(giant)]) giant = c;
    auto vals = centrality(g, metric);
    double floor_val = *std::min_element(vals.begin(), vals.end()) - 1.0;
    for (VertexId v = 0; v < g.node_count(); ++v)
        if (comps.id[v] != giant) vals[v] = floor_val;
    return top_k(vals, k);
}

} // namespace

std::vector<RobustnessResult> robustness_sweep(const Graph& g, Metric metric,
                                               const std::vector<double>& fractions, std::size_t k,
                                               std::size_t trials, std::uint64_t seed,
                                               bool giant_only) {
    if (k > g.node_count()) throw Error("robustness_sweep: k exceeds vertex count");
    if (trials < 1) throw Error("robustness_sweep: trials must be >= 1");
    auto base_top = top_k(centrality(g, metric), k);
    int base_components = connected_components(g).count;
    Rng root(seed);

    std::vector<RobustnessResult> out(fractions.size());
    // trials within one fraction run concurrently; the per-trial substream
    // depends only on (seed, fraction index, trial index)
    for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
        RobustnessResult r;
        r.metric = metric;
        r.delete_fraction = fractions[fi];
        r.k = k;
        r.trials = trials;
        std::vector<double> taus(trials, 0.0);
        std::vector<char> fragged(trials, 0);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
            Rng sub = root.substream(fi * 1000003ULL + static_cast<std::uint64_t>(t));
            PerturbResult pert = perturb_edges(g, fractions[fi], sub.next_u64());
            auto top = perturbed_top_k(pert.graph, metric, k, giant_only);
            taus[t] = pert.noop ? 1.0 : topk_rank_tau(base_top, top, k);
            fragged[t] = connected_components(pert.graph).count > base_components;
        }
        double mean = 0;
        for (double t : taus) mean += t;
        mean /= static_cast<double>(trials);
        double q = 0;
        for (double t : taus) q += (t - mean) * (t - mean);
        r.tau_mean = mean;
        r.tau_sd = trials > 1 ? std::sqrt(q / static_cast<double>(trials - 1)) : 0.0;
        for (char f : fragged) r.fragmented_trials += f;
        out[fi] = r;
    }
    return out;
}

} // namespace rcc
