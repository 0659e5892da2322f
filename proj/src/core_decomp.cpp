#include "rcc/core_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace rcc {

std::vector<VertexId> CoreDecomposition::shell(int k) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < core_number.size(); ++v)
        if (core_number[v] == k) out.push_back(v);
    return out;
}

std::vector<int> CoreDecomposition::shell_indices() const {
    std::vector<bool> seen(static_cast<std::size_t>(max_core) + 1, false);
    for (int c : core_number) seen[static_cast<std::size_t>(c)] = true;
    std::vector<int> out;
    for (int k = max_core; k >= 0; --k)
        if (seen[static_cast<std::size_t>(k)]) out.push_back(k);
    return out;
}

CoreDecomposition core_numbers(const Graph& g) {
    // Batagelj-Zaversnik bucket peeling
    std::size_t n = g.node_count();
    CoreDecomposition d;
    d.core_number.assign(n, 0);
    if (n == 0) return d;

    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
    std::size_t start = 0;
    for (std::size_t k = 0; k <= max_deg; ++k) {
        std::size_t cnt = bin[k];
        bin[k] = start;
        start += cnt;
    }
    std::vector<VertexId> order(n);
    std::vector<std::size_t> pos(n);
    for (VertexId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]];
        order[pos[v]] = v;
        ++bin[deg[v]];
    }
    for (std::size_t k = max_deg + 1; k > 0; --k) bin[k] = bin[k - 1];
    bin[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = order[i];
        d.core_number[v] = static_cast<int>(deg[v]);
        for (VertexId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                std::size_t du = deg[u];
                std::size_t pu = pos[u];
                std::size_t pw = bin[du];
                VertexId w = order[pw];
                if (u != w) {
                    std::swap(order[pu], order[pw]);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    d.max_core = 0;
    for (int c : d.core_number) d.max_core = std::max(d.max_core, c);
    return d;
}

std::vector<VertexId> k_core(const CoreDecomposition& d, int k) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < d.core_number.size(); ++v)
        if (d.core_number[v] >= k) out.push_back(v);
    return out;
}

ShellSubgraph shell_subgraph(const Graph& g, const CoreDecomposition& d, int k) {
    std::vector<VertexId> shell = d.shell(k);
    if (shell.empty()) throw Error("shell " + std::to_string(k) + " is empty");
    std::vector<bool> in_members(g.node_count(), false);
    for (VertexId v : shell) {
        in_members[v] = true;
        for (VertexId w : g.neighbors(v)) in_members[w] = true;
    }
    ShellSubgraph s;
    s.shell_index = k;
    for (VertexId v = 0; v < g.node_count(); ++v)
        if (in_members[v]) s.members.push_back(v);

    std::vector<VertexId> local(g.node_count());
    for (std::size_t i = 0; i < s.members.size(); ++i) local[s.members[i]] = static_cast<VertexId>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v : s.members)
        for (VertexId w : g.neighbors(v))
            if (v < w && in_members[w]) edges.emplace_back(local[v], local[w]);
    s.graph = Graph::from_edges(s.members.size(), std::move(edges));
    s.n_k = s.members.size();
    s.d_k = s.n_k ? 2.0 * static_cast<double>(s.graph.edge_count()) / static_cast<double>(s.n_k) : 0.0;
    return s;
}

ShellBuckets shell_buckets(const CoreDecomposition& d) {
    std::vector<int> ks = d.shell_indices();
    ShellBuckets b;
    std::size_t s = ks.size();
    b.degenerate = s < 3;
    std::size_t n_in = static_cast<std::size_t>(std::ceil(0.25 * static_cast<double>(s)));
    std::size_t n_mid = static_cast<std::size_t>(std::ceil(0.25 * static_cast<double>(s)));
    for (std::size_t i = 0; i < s; ++i) {
        if (i < n_in)
            b.inner.push_back(ks[i]);
        else if (i < n_in + n_mid)
            b.mid.push_back(ks[i]);
        else
            b.outer.push_back(ks[i]);
    }
    return b;
}

} // namespace rcc
