#include "rcc/rcc_detect.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace rcc {

DensityProfile density_profile(const Graph& g, const CoreDecomposition& d) {
    DensityProfile p;
    ShellBuckets buckets = shell_buckets(d);
    std::vector<int> ks = d.shell_indices();
    for (int k : ks) {
        ShellSubgraph s = shell_subgraph(g, d, k);
        p.records.push_back({k, s.n_k, s.d_k});
    }
    auto mean_of = [&](const std::vector<int>& shells, bool degree) {
        double sum = 0;
        std::size_t cnt = 0;
        for (const auto& r : p.records)
            if (std::find(shells.begin(), shells.end(), r.shell_index) != shells.end()) {
                sum += degree ? r.d_k : static_cast<double>(r.n_k);
                ++cnt;
            }
        return cnt ? sum / static_cast<double>(cnt) : 0.0;
    };
    std::vector<const std::vector<int>*> populated;
    for (const auto* b : {&buckets.inner, &buckets.mid, &buckets.outer})
        if (!b->empty()) populated.push_back(b);
    p.degenerate = populated.size() < 2;
    if (p.degenerate) {
        p.monotone = true; // vacuously
        if (!populated.empty()) {
            p.inner_mean_d = p.outer_mean_d = mean_of(*populated.front(), true);
            p.inner_mean_n = p.outer_mean_n = mean_of(*populated.front(), false);
        }
        return p;
    }
    const auto& innermost = *populated.front();
    const auto& outermost = *populated.back();
    p.inner_mean_d = mean_of(innermost, true);
    p.outer_mean_d = mean_of(outermost, true);
    p.inner_mean_n = mean_of(innermost, false);
    p.outer_mean_n = mean_of(outermost, false);
    p.monotone = p.inner_mean_d > p.outer_mean_d && p.inner_mean_n < p.outer_mean_n;
    return p;
}

std::vector<ShellDistanceRecord> shell_to_core_distance(const Graph& g,
                                                        const CoreDecomposition& d, int x) {
    std::vector<VertexId> core = k_core(d, x);
    if (core.empty()) throw Error("shell_to_core_distance: core C_" + std::to_string(x) + " is empty");
    std::vector<int> dist(g.node_count(), -1);
    std::deque<VertexId> queue;
    for (VertexId v : core) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    std::vector<ShellDistanceRecord> out;
    for (int k : d.shell_indices()) {
        if (k >= x) continue;
        ShellDistanceRecord rec;
        rec.shell_index = k;
        double sum = 0;
        for (VertexId v = 0; v < g.node_count(); ++v) {
            if (d.core_number[v] != k) continue;
            if (dist[v] >= 0) {
                sum += dist[v];
                ++rec.reachable;
            } else {
                ++rec.unreachable;
            }
        }
        rec.mean_distance = rec.reachable ? sum / static_cast<double>(rec.reachable)
                                          : std::numeric_limits<double>::infinity();
        out.push_back(rec);
    }
    return out;
}

int reference_core_index(const Graph& g, const CoreDecomposition& d, double target_density) {
    for (int k : d.shell_indices()) {
        std::vector<VertexId> core = k_core(d, k);
        if (core.size() < 2) continue;
        std::size_t m = 0;
        std::vector<bool> in(g.node_count(), false);
        for (VertexId v : core) in[v] = true;
        for (VertexId v : core)
            for (VertexId w : g.neighbors(v))
                if (v < w && in[w]) ++m;
        double dens = 2.0 * static_cast<double>(m) /
                      (static_cast<double>(core.size()) * (static_cast<double>(core.size()) - 1));
        if (dens >= target_density) return k;
    }
    return d.max_core;
}

RccVerdict detect_rcc(const Graph& g, const RccCriteria& criteria) {
    RccVerdict v;
    CoreDecomposition d = core_numbers(g);
    if (d.max_core < 2) {
        v.reason = "max core below 2";
        return v;
    }
    ShellBuckets buckets = shell_buckets(d);
    v.degenerate = d.shell_indices().size() == 1;

    v.density = density_profile(g, d);
    v.property1_ok = v.density.monotone;

    v.eigengap = shell_eigengap_profile(g, d, criteria.spectral);
    if (criteria.strict) {
        bool ok = false, all = true;
        for (const auto& r : v.eigengap.records)
            if (r.lambda2) {
                ok = true;
                if (*r.lambda2 <= criteria.eigengap_threshold) all = false;
            }
        v.property2_ok = ok && all;
    } else {
        // soft mode: the expander requirement binds on the inner bucket only
        bool any = false, all = true;
        for (const auto& r : v.eigengap.records) {
            if (std::find(buckets.inner.begin(), buckets.inner.end(), r.shell_index) ==
                buckets.inner.end())
                continue;
            if (!r.lambda2) continue;
            any = true;
            if (*r.lambda2 <= criteria.eigengap_threshold) all = false;
        }
        v.property2_ok = any && all && v.eigengap.inner.count > 0 &&
                         v.eigengap.inner.mean > criteria.eigengap_threshold;
    }

    v.reference_core = reference_core_index(g, d, criteria.target_core_density);
    v.distances = shell_to_core_distance(g, d, v.reference_core);
    v.property3_ok = true;
    for (const auto& rec : v.distances) {
        if (rec.unreachable > 0 || !(rec.mean_distance < criteria.distance_threshold)) {
            v.property3_ok = false;
            break;
        }
    }

    v.has_rcc = v.property1_ok && v.property2_ok && v.property3_ok;
    if (!v.has_rcc) {
        v.reason = "failed:";
        if (!v.property1_ok) v.reason += " density-monotonicity";
        if (!v.property2_ok) v.reason += " eigengap";
        if (!v.property3_ok) v.reason += " distance";
    }
    if (v.has_rcc) v.rcc_members = d.shell(d.max_core);
    return v;
}

std::optional<int> lemma_scan(const std::vector<LemmaShell>& shells,
                              const std::vector<std::vector<double>>& r) {
    // shells innermost-first; r[y][z] indexed the same way
    for (std::size_t xi = 0; xi + 1 < shells.size(); ++xi) {
        bool all_ok = true;
        for (std::size_t yi = xi + 1; yi < shells.size(); ++yi) {
            const auto& y = shells[yi];
            if (!y.estimate) continue; // excluded with a warning upstream
            bool found = false;
            for (std::size_t zi = 0; zi <= xi; ++zi) {
                const auto& z = shells[zi];
                if (!z.estimate) continue;
                if (*y.estimate > r[yi][zi] + *z.estimate) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return shells[xi].shell_index;
    }
    return std::nullopt;
}

LemmaResult lemma_condition(const Graph& g, const CoreDecomposition& d) {
    LemmaResult res;
    std::vector<int> ks = d.shell_indices();
    for (int k : ks) {
        ShellSubgraph s = shell_subgraph(g, d, k);
        LemmaShell sh;
        sh.shell_index = k;
        sh.n_k = s.n_k;
        sh.d_k = s.d_k;
        if (s.d_k > 1.0)
            sh.estimate = std::log(static_cast<double>(s.n_k)) / std::log(s.d_k);
        else
            ++res.undefined_shells;
        res.shells.push_back(sh);
    }
    std::vector<std::vector<double>> r(ks.size(), std::vector<double>(ks.size(), 0.0));
    for (std::size_t zi = 0; zi < ks.size(); ++zi) {
        auto dists = shell_to_core_distance(g, d, ks[zi]);
        for (const auto& rec : dists) {
            auto it = std::find(ks.begin(), ks.end(), rec.shell_index);
            std::size_t yi = static_cast<std::size_t>(it - ks.begin());
            r[yi][zi] = rec.mean_distance; // +inf when the shell cannot reach C_z
        }
    }
    res.core_index = lemma_scan(res.shells, r);
    return res;
}

} // namespace rcc
