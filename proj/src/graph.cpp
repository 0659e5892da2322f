#include "rcc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <omp.h>
#include <ostream>
#include <sstream>

namespace rcc {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
    g_threads = n;
    if (n > 0) omp_set_num_threads(n);
}

int thread_count() { return g_threads; }

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<std::string> labels) {
    Graph g;
    std::size_t loops = 0;
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::pair<VertexId, VertexId>> uniq;
    uniq.reserve(edges.size());
    std::size_t dups = 0;
    for (const auto& e : edges) {
        if (e.first == e.second) {
            ++loops;
            continue;
        }
        if (!uniq.empty() && uniq.back() == e) {
            ++dups;
            continue;
        }
        uniq.push_back(e);
    }
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : uniq) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adj_.resize(2 * uniq.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : uniq) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    g.edge_count_ = uniq.size();
    g.self_loops_ = loops;
    g.duplicates_ = dups;
    g.labels_ = std::move(labels);
    if (!g.labels_.empty() && g.labels_.size() != n) throw Error("label count mismatch");
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < node_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

namespace {

bool parse_u64(const std::string& s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#' || line[i] == '%') continue;
        std::istringstream ls(line.substr(i));
        std::string a, b, extra;
        if (!(ls >> a >> b))
            throw ParseError("line " + std::to_string(lineno) + ": expected two tokens");
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        raw.emplace_back(std::move(a), std::move(b));
    }
    if (raw.empty()) throw Error("empty graph: no edges in input");

    bool all_numeric = true;
    for (const auto& [a, b] : raw) {
        std::uint64_t x;
        if (!parse_u64(a, x) || !parse_u64(b, x)) {
            all_numeric = false;
            break;
        }
    }
    // ordered label -> id map; numeric order when possible so that loading is
    // insensitive to the order of lines
    std::map<std::string, VertexId> ids;
    if (all_numeric) {
        std::map<std::uint64_t, std::string> sorted;
        for (const auto& [a, b] : raw) {
            std::uint64_t x, y;
            parse_u64(a, x);
            parse_u64(b, y);
            sorted.emplace(x, a);
            sorted.emplace(y, b);
        }
        VertexId next = 0;
        for (auto& [_, lab] : sorted) ids.emplace(lab, next++);
    } else {
        for (const auto& [a, b] : raw) {
            ids.emplace(a, 0);
            ids.emplace(b, 0);
        }
        VertexId next = 0;
        for (auto& [_, id] : ids) id = next++;
    }
    std::vector<std::string> labels(ids.size());
    for (const auto& [lab, id] : ids) labels[id] = lab;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) edges.emplace_back(ids.at(a), ids.at(b));
    return Graph::from_edges(ids.size(), std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges())
        out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

namespace {

double local_clustering(const Graph& g, VertexId v) {
    auto nb = g.neighbors(v);
    std::size_t d = nb.size();
    if (d < 2) return 0.0;
    std::size_t tri = 0;
    for (std::size_t i = 0; i < d; ++i) {
        auto ni = g.neighbors(nb[i]);
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::binary_search(ni.begin(), ni.end(), nb[j])) ++tri;
    }
    return 2.0 * static_cast<double>(tri) / (static_cast<double>(d) * (d - 1));
}

} // namespace

ClusteringResult clustering_coefficient_serial(const Graph& g) {
    ClusteringResult r;
    std::size_t n = g.node_count();
    r.values.resize(n);
    for (VertexId v = 0; v < n; ++v) r.values[v] = local_clustering(g, v);
    double sum = 0;
    for (double x : r.values) sum += x;
    r.mean = n ? sum / static_cast<double>(n) : 0.0;
    return r;
}

ClusteringResult clustering_coefficient(const Graph& g) {
    ClusteringResult r;
    std::size_t n = g.node_count();
    r.values.resize(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
        r.values[v] = local_clustering(g, static_cast<VertexId>(v));
    double sum = 0; // summed in index order, independent of thread count
    for (double x : r.values) sum += x;
    r.mean = n ? sum / static_cast<double>(n) : 0.0;
    return r;
}

std::optional<double> powerlaw_fit(const Graph& g, int k_min) {
    if (k_min < 1) throw Error("powerlaw_fit: k_min must be >= 1");
    std::size_t n_tail = 0;
    double log_sum = 0.0;
    bool all_at_kmin = true;
    for (VertexId v = 0; v < g.node_count(); ++v) {
        auto d = static_cast<double>(g.degree(v));
        if (d < k_min) continue;
        ++n_tail;
        if (d != static_cast<double>(k_min)) all_at_kmin = false;
        log_sum += std::log(d / (k_min - 0.5));
    }
    if (n_tail == 0) throw Error("powerlaw_fit: no vertex with degree >= k_min");
    if (all_at_kmin) return std::nullopt; // single-valued tail, slope undefined
    return 1.0 + static_cast<double>(n_tail) / log_sum;
}

Components connected_components(const Graph& g) {
    Components c;
    std::size_t n = g.node_count();
    c.id.assign(n, -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (c.id[s] >= 0) continue;
        int comp = c.count++;
        c.id[s] = comp;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(u))
                if (c.id[w] < 0) {
                    c.id[w] = comp;
                    stack.push_back(w);
                }
        }
    }
    return c;
}

} // namespace rcc
