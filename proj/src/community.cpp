#include "rcc/community.hpp"
#include "rcc/centrality.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rcc {

Partition detect_communities(const Graph& g, std::uint64_t /*seed*/) {
    // Synchronous propagation with the smallest-label tie-break is fully
    // deterministic; the seed is part of the interface for drop-in
    // replacement detectors and is recorded by the caller.
    std::size_t n = g.node_count();
    std::vector<int> label(n), next(n), two_ago(n, -1);
    std::iota(label.begin(), label.end(), 0);
    std::map<int, std::size_t> freq;
    for (int round = 0; round < 100; ++round) {
        for (VertexId v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            if (nb.empty()) {
                next[v] = label[v];
                continue;
            }
            freq.clear();
            for (VertexId w : nb) ++freq[label[w]];
            std::size_t best_count = 0;
            int best_label = label[v];
            bool first = true;
            for (const auto& [lab, cnt] : freq) {
                if (first || cnt > best_count) {
                    best_count = cnt;
                    best_label = lab;
                    first = false;
                }
            }
            next[v] = best_label;
        }
        if (next == label) break;
        if (next == two_ago) { // period-2 oscillation, settle on current state
            label = next;
            break;
        }
        two_ago = label;
        label = next;
    }

    // split label groups into connected components so every community is
    // internally connected
    std::vector<int> comp(n, -1);
    int raw_count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = raw_count++;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(u))
                if (comp[w] < 0 && label[w] == label[u]) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
    }
    // re-id ordered by (size desc, smallest member asc)
    std::vector<std::size_t> size(static_cast<std::size_t>(raw_count), 0);
    std::vector<VertexId> smallest(static_cast<std::size_t>(raw_count), 0);
    for (VertexId v = 0; v < n; ++v) {
        auto c = static_cast<std::size_t>(comp[v]);
        if (size[c] == 0) smallest[c] = v;
        ++size[c];
    }
    std::vector<int> order(raw_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto sa = size[static_cast<std::size_t>(a)], sb = size[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return smallest[static_cast<std::size_t>(a)] < smallest[static_cast<std::size_t>(b)];
    });
    std::vector<int> remap(raw_count);
    for (int i = 0; i < raw_count; ++i) remap[static_cast<std::size_t>(order[i])] = i;
    Partition p;
    p.count = raw_count;
    p.community.resize(n);
    for (VertexId v = 0; v < n; ++v) p.community[v] = remap[static_cast<std::size_t>(comp[v])];
    return p;
}

std::vector<CommunityCoreRow> core_community_distribution(const Graph& g,
                                                          const CoreDecomposition& d,
                                                          const Partition& p) {
    std::vector<CommunityCoreRow> rows(static_cast<std::size_t>(p.count));
    for (int c = 0; c < p.count; ++c) rows[static_cast<std::size_t>(c)].community = c;
    for (VertexId v = 0; v < g.node_count(); ++v) {
        auto& row = rows[static_cast<std::size_t>(p.community[v])];
        ++row.community_size;
        if (d.core_number[v] == d.max_core) ++row.core_members;
    }
    std::erase_if(rows, [](const CommunityCoreRow& r) { return r.core_members == 0; });
    std::sort(rows.begin(), rows.end(), [](const CommunityCoreRow& a, const CommunityCoreRow& b) {
        if (a.community_size != b.community_size) return a.community_size > b.community_size;
        return a.community < b.community;
    });
    return rows;
}

SuperGraph supervertex_reduction(const Graph& g, const CoreDecomposition& d, const Partition& p) {
    std::vector<VertexId> core = d.shell(d.max_core);
    if (core.empty()) throw Error("supervertex_reduction: empty innermost core");
    std::vector<bool> in_core(g.node_count(), false);
    for (VertexId v : core) in_core[v] = true;

    SuperGraph sg;
    sg.vertices.resize(static_cast<std::size_t>(p.count) + 1);
    for (int c = 0; c <= p.count; ++c) {
        sg.vertices[static_cast<std::size_t>(c)].id = c;
        sg.vertices[static_cast<std::size_t>(c)].is_core = (c == p.count);
    }
    std::vector<int> sv(g.node_count());
    for (VertexId v = 0; v < g.node_count(); ++v) {
        sv[v] = in_core[v] ? p.count : p.community[v];
        sg.vertices[static_cast<std::size_t>(sv[v])].members.push_back(v);
    }
    auto close = closeness(g);
    auto betw = betweenness(g);
    for (auto& s : sg.vertices) {
        if (s.members.empty()) continue;
        double cs = 0, bs = 0;
        for (VertexId v : s.members) {
            cs += close[v];
            bs += betw[v];
        }
        s.mean_closeness = cs / static_cast<double>(s.members.size());
        s.mean_betweenness = bs / static_cast<double>(s.members.size());
    }
    std::vector<std::pair<int, int>> raw;
    for (VertexId u = 0; u < g.node_count(); ++u)
        for (VertexId w : g.neighbors(u))
            if (u < w && sv[u] != sv[w]) raw.emplace_back(std::min(sv[u], sv[w]), std::max(sv[u], sv[w]));
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    sg.edges = std::move(raw);
    return sg;
}

} // namespace rcc
