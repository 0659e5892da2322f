#include "rcc/spectral.hpp"
#include "rcc/rng.hpp"

#include <algorithm>
#include <cmath>

namespace rcc {

namespace {

// drops isolated vertices, returns induced graph (D^{-1/2} needs degree >= 1)
Graph without_isolated(const Graph& g, std::size_t* removed = nullptr) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    if (removed) *removed = g.node_count() - keep.size();
    if (keep.size() == g.node_count()) return g;
    std::vector<VertexId> local(g.node_count());
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<VertexId>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v : keep)
        for (VertexId w : g.neighbors(v))
            if (v < w) edges.emplace_back(local[v], local[w]);
    return Graph::from_edges(keep.size(), std::move(edges));
}

// y = L x for the normalized Laplacian, matrix-free
void apply_laplacian(const Graph& g, const std::vector<double>& inv_sqrt_deg,
                     const std::vector<double>& x, std::vector<double>& y) {
    std::size_t n = g.node_count();
    for (VertexId v = 0; v < n; ++v) {
        double s = 0.0;
        for (VertexId w : g.neighbors(v)) s += inv_sqrt_deg[w] * x[w];
        y[v] = x[v] - inv_sqrt_deg[v] * s;
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

// Lanczos with deflation of the known null vector D^{1/2} 1 and full
// reorthogonalization; returns the smallest eigenvalue in the deflated space,
// which is lambda2 for connected graphs.
double lanczos_lambda2(const Graph& g, const SpectralOptions& opt) {
    std::size_t n = g.node_count();
    std::vector<double> inv_sqrt_deg(n), null_vec(n);
    for (VertexId v = 0; v < n; ++v) {
        double d = static_cast<double>(g.degree(v));
        inv_sqrt_deg[v] = 1.0 / std::sqrt(d);
        null_vec[v] = std::sqrt(d);
    }
    double nn = norm(null_vec);
    for (double& x : null_vec) x /= nn;

    Rng rng(opt.start_seed);
    std::vector<double> q(n);
    for (double& x : q) x = rng.next_double() - 0.5;
    axpy(-dot(q, null_vec), null_vec, q);
    double qs = norm(q);
    if (qs == 0) throw Error("lanczos: degenerate start vector");
    for (double& x : q) x /= qs;

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    std::vector<double> w(n), prev(n, 0.0);
    double prev_theta = 2.0;
    int m_max = static_cast<int>(std::min<std::size_t>(n, 400));
    for (int it = 0; it < opt.max_iter; ++it) {
        basis.push_back(q);
        apply_laplacian(g, inv_sqrt_deg, q, w);
        double a = dot(w, q);
        alpha.push_back(a);
        axpy(-a, q, w);
        if (!beta.empty()) axpy(-beta.back(), prev, w);
        // full reorthogonalization against the null vector and stored basis
        axpy(-dot(w, null_vec), null_vec, w);
        for (const auto& b : basis) axpy(-dot(w, b), b, w);
        double bnorm = norm(w);

        // smallest Ritz value of the tridiagonal matrix
        int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                t(i, i + 1) = beta[static_cast<std::size_t>(i)];
                t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
        double theta = es.eigenvalues()(0);
        if (std::abs(theta - prev_theta) < opt.tol && it >= 2) return theta;
        prev_theta = theta;
        if (bnorm < 1e-14 || m >= m_max) return theta;
        beta.push_back(bnorm);
        prev = q;
        for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / bnorm;
    }
    return prev_theta;
}

} // namespace

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
    std::size_t n = g.node_count();
    if (n == 0) throw Error("normalized_laplacian: empty graph");
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw Error("normalized_laplacian: isolated vertex present");
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<double> inv_sqrt_deg(n);
    for (VertexId v = 0; v < n; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    for (VertexId v = 0; v < n; ++v) {
        l(v, v) = 1.0;
        for (VertexId w : g.neighbors(v)) l(v, w) = -inv_sqrt_deg[v] * inv_sqrt_deg[w];
    }
    return l;
}

double connected_lambda2(const Graph& g, const SpectralOptions& opt) {
    std::size_t n = g.node_count();
    if (n < 2) throw Error("lambda2 undefined for graphs smaller than 2 vertices");
    if (n <= opt.dense_threshold) {
        Eigen::MatrixXd l = normalized_laplacian(g);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l, Eigen::EigenvaluesOnly);
        return es.eigenvalues()(1);
    }
    return lanczos_lambda2(g, opt);
}

SpectralResult eigengap(const Graph& g, const SpectralOptions& opt) {
    std::size_t removed = 0;
    Graph h = without_isolated(g, &removed);
    if (g.node_count() < 2) throw Error("eigengap undefined for graphs smaller than 2 vertices");
    Components comps = connected_components(g);
    SpectralResult r;
    r.component_count = comps.count;
    if (comps.count > 1 || h.node_count() < 2) {
        r.lambda2 = 0.0; // 0 eigenvalue multiplicity equals the component count
    } else {
        r.lambda2 = std::max(0.0, connected_lambda2(h, opt));
    }
    r.cheeger_lower = r.lambda2 / 2.0;
    r.cheeger_upper = std::sqrt(2.0 * r.lambda2);
    return r;
}

std::optional<double> component_min_eigengap(const Graph& g, const SpectralOptions& opt) {
    Components comps = connected_components(g);
    std::vector<std::vector<VertexId>> members(static_cast<std::size_t>(comps.count));
    for (VertexId v = 0; v < g.node_count(); ++v)
        members[static_cast<std::size_t>(comps.id[v])].push_back(v);
    std::optional<double> best;
    std::vector<VertexId> local(g.node_count());
    for (const auto& mem : members) {
        if (mem.size() < opt.min_component_size) continue;
        for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = static_cast<VertexId>(i);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v : mem)
            for (VertexId w : g.neighbors(v))
                if (v < w) edges.emplace_back(local[v], local[w]);
        Graph sub = Graph::from_edges(mem.size(), std::move(edges));
        double l2 = connected_lambda2(sub, opt);
        if (!best || l2 < *best) best = l2;
    }
    return best;
}

namespace {

ShellEigengapProfile profile_impl(const Graph& g, const CoreDecomposition& d,
                                  const SpectralOptions& opt, bool parallel) {
    ShellEigengapProfile p;
    ShellBuckets buckets = shell_buckets(d);
    p.degenerate_buckets = buckets.degenerate;
    std::vector<int> ks = d.shell_indices();
    p.records.resize(ks.size());

    auto solve_one = [&](std::size_t i) {
        ShellSubgraph s = shell_subgraph(g, d, ks[i]);
        SpectralOptions o = opt;
        o.start_seed = opt.start_seed ^ (0x9e3779b9ULL * static_cast<std::uint64_t>(ks[i] + 1));
        ShellSpectralRecord rec;
        rec.shell_index = ks[i];
        rec.n_k = s.n_k;
        rec.d_k = s.d_k;
        rec.lambda2 = component_min_eigengap(s.graph, o);
        p.records[i] = rec;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(ks.size()); ++i)
            solve_one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < ks.size(); ++i) solve_one(i);
    }
    for (const auto& r : p.records)
        if (!r.lambda2) ++p.excluded;

    auto aggregate = [&](const std::vector<int>& shells) {
        BucketAggregate a;
        a.shells = shells;
        std::vector<double> vals;
        for (const auto& r : p.records)
            if (r.lambda2 && std::find(shells.begin(), shells.end(), r.shell_index) != shells.end())
                vals.push_back(*r.lambda2);
        a.count = vals.size();
        if (!vals.empty()) {
            double s = 0;
            for (double v : vals) s += v;
            a.mean = s / static_cast<double>(vals.size());
            double q = 0;
            for (double v : vals) q += (v - a.mean) * (v - a.mean);
            a.sd = vals.size() > 1 ? std::sqrt(q / static_cast<double>(vals.size() - 1)) : 0.0;
        }
        return a;
    };
    p.inner = aggregate(buckets.inner);
    p.mid = aggregate(buckets.mid);
    p.outer = aggregate(buckets.outer);
    return p;
}

} // namespace

ShellEigengapProfile shell_eigengap_profile(const Graph& g, const CoreDecomposition& d,
                                            const SpectralOptions& opt) {
    return profile_impl(g, d, opt, true);
}

ShellEigengapProfile shell_eigengap_profile_serial(const Graph& g, const CoreDecomposition& d,
                                                   const SpectralOptions& opt) {
    return profile_impl(g, d, opt, false);
}

} // namespace rcc
