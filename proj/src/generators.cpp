#include "rcc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace rcc {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw Error("erdos_renyi: n must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw Error("erdos_renyi: p must be in (0,1)");
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph powerlaw_config(std::size_t n, double exponent, int k_min, std::uint64_t seed,
                      ConfigModelReport* report) {
    if (exponent <= 1.0) throw Error("powerlaw_config: exponent must be > 1");
    if (k_min < 1) throw Error("powerlaw_config: k_min must be >= 1");
    if (n < 2) throw Error("powerlaw_config: n must be >= 2");
    Rng rng(seed);

    std::size_t k_max = n - 1;
    std::vector<double> cdf;
    cdf.reserve(k_max - static_cast<std::size_t>(k_min) + 1);
    double total = 0.0;
    for (std::size_t k = static_cast<std::size_t>(k_min); k <= k_max; ++k) {
        total += std::pow(static_cast<double>(k), -exponent);
        cdf.push_back(total);
    }
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) {
        double u = rng.next_double() * total;
        std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx >= cdf.size()) idx = cdf.size() - 1;
        deg[v] = static_cast<std::size_t>(k_min) + idx;
    }
    std::size_t total_deg = 0;
    for (std::size_t d : deg) total_deg += d;
    ConfigModelReport rep;
    if (total_deg % 2 == 1) {
        rep.stub_adjusted = true;
        if (deg[0] < k_max)
            ++deg[0];
        else
            --deg[0];
    }
    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < n; ++v)
        for (std::size_t i = 0; i < deg[v]; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        VertexId a = stubs[i], b = stubs[i + 1];
        if (a == b) {
            ++rep.loops_dropped;
            continue;
        }
        auto e = std::minmax(a, b);
        if (!seen.insert({e.first, e.second}).second) {
            ++rep.multi_dropped;
            continue;
        }
        edges.emplace_back(e.first, e.second);
    }
    if (report) *report = rep;
    return Graph::from_edges(n, std::move(edges));
}

Graph clique_star(std::size_t hub_size, std::size_t satellite_count, std::size_t satellite_size,
                  std::size_t links_per_satellite, std::uint64_t seed) {
    if (satellite_count > 0) {
        if (!(hub_size > satellite_size && satellite_size >= 3))
            throw Error("clique_star: need hub_size > satellite_size >= 3");
        if (links_per_satellite < 1) throw Error("clique_star: links_per_satellite must be >= 1");
        if (links_per_satellite > satellite_size || links_per_satellite > hub_size)
            throw Error("clique_star: links_per_satellite exceeds clique size");
    } else if (hub_size < 1) {
        throw Error("clique_star: hub_size must be >= 1");
    }
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto add_clique = [&edges](VertexId base, std::size_t size) {
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j)
                edges.emplace_back(base + static_cast<VertexId>(i), base + static_cast<VertexId>(j));
    };
    add_clique(0, hub_size);
    VertexId next = static_cast<VertexId>(hub_size);
    for (std::size_t s = 0; s < satellite_count; ++s) {
        add_clique(next, satellite_size);
        auto hub_targets = rng.sample_indices(hub_size, links_per_satellite);
        auto sat_sources = rng.sample_indices(satellite_size, links_per_satellite);
        for (std::size_t i = 0; i < links_per_satellite; ++i)
            edges.emplace_back(static_cast<VertexId>(hub_targets[i]),
                               next + static_cast<VertexId>(sat_sources[i]));
        next += static_cast<VertexId>(satellite_size);
    }
    return Graph::from_edges(next, std::move(edges));
}

Graph ring_of_cliques(const std::vector<std::size_t>& sizes, std::size_t inter_edges,
                      std::uint64_t seed) {
    if (sizes.size() < 3) throw Error("ring_of_cliques: need at least 3 cliques");
    for (std::size_t s : sizes)
        if (s < 3) throw Error("ring_of_cliques: clique sizes must be >= 3");
    if (inter_edges < 1) throw Error("ring_of_cliques: inter_edges must be >= 1");
    for (std::size_t s : sizes)
        if (inter_edges > s) throw Error("ring_of_cliques: inter_edges exceeds a clique size");

    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> base(sizes.size());
    std::vector<VertexId> gateway(sizes.size());
    VertexId next = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        base[c] = next;
        for (std::size_t i = 0; i < sizes[c]; ++i)
            for (std::size_t j = i + 1; j < sizes[c]; ++j)
                edges.emplace_back(next + static_cast<VertexId>(i), next + static_cast<VertexId>(j));
        gateway[c] = next + static_cast<VertexId>(rng.next_below(sizes[c]));
        next += static_cast<VertexId>(sizes[c]);
    }
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        std::size_t nc = (c + 1) % sizes.size();
        auto targets = rng.sample_indices(sizes[nc], inter_edges);
        for (std::size_t t : targets)
            edges.emplace_back(gateway[c], base[nc] + static_cast<VertexId>(t));
    }
    return Graph::from_edges(next, std::move(edges));
}

Graph generate(const GeneratorSpec& spec) {
    if (spec.family == "erdos-renyi") return erdos_renyi(spec.n, spec.p, spec.rng_seed);
    if (spec.family == "powerlaw-config")
        return powerlaw_config(spec.n, spec.exponent, spec.k_min, spec.rng_seed);
    if (spec.family == "clique-star")
        return clique_star(spec.hub_size, spec.satellite_count, spec.satellite_size,
                           spec.links_per_satellite, spec.rng_seed);
    if (spec.family == "ring-of-cliques")
        return ring_of_cliques(spec.sizes, spec.inter_edges, spec.rng_seed);
    throw Error("unknown generator family: " + spec.family);
}

std::string generator_spec_json(const GeneratorSpec& spec) {
    std::ostringstream out;
    out << "{\"family\":\"" << spec.family << "\",\"rng_seed\":" << spec.rng_seed;
    if (spec.family == "erdos-renyi") out << ",\"n\":" << spec.n << ",\"p\":" << spec.p;
    if (spec.family == "powerlaw-config")
        out << ",\"n\":" << spec.n << ",\"exponent\":" << spec.exponent
            << ",\"k_min\":" << spec.k_min;
    if (spec.family == "clique-star")
        out << ",\"hub_size\":" << spec.hub_size << ",\"satellite_count\":" << spec.satellite_count
            << ",\"satellite_size\":" << spec.satellite_size
            << ",\"links_per_satellite\":" << spec.links_per_satellite;
    if (spec.family == "ring-of-cliques") {
        out << ",\"sizes\":[";
        for (std::size_t i = 0; i < spec.sizes.size(); ++i)
            out << (i ? "," : "") << spec.sizes[i];
        out << "],\"inter_edges\":" << spec.inter_edges;
    }
    out << "}";
    return out.str();
}

} // namespace rcc
