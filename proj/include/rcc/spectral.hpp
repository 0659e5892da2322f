#pragma once
#include "rcc/core_decomp.hpp"
#include "rcc/graph.hpp"

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace rcc {

struct SpectralOptions {
    std::size_t dense_threshold = 500; // dense solve below, Lanczos above
    double tol = 1e-8;
    int max_iter = 5000;
    std::uint64_t start_seed = 1; // start vector for the iterative path
    std::size_t min_component_size = 3;
};

struct SpectralResult {
    double lambda2 = 0.0;
    double cheeger_lower = 0.0; // lambda2 / 2
    double cheeger_upper = 0.0; // sqrt(2 lambda2)
    int component_count = 1;
};

// L = I - D^{-1/2} A D^{-1/2}. Isolated vertices must be removed first.
Eigen::MatrixXd normalized_laplacian(const Graph& g);

// Second-smallest eigenvalue of L for the whole graph; exactly 0 when the
// graph is disconnected. Throws for graphs with fewer than 2 vertices.
SpectralResult eigengap(const Graph& g, const SpectralOptions& opt = {});

// lambda2 of a single connected graph (no isolated vertices after removal).
double connected_lambda2(const Graph& g, const SpectralOptions& opt = {});

// Minimum lambda2 over connected components with >= min_component_size
// vertices; nullopt when no component is large enough.
std::optional<double> component_min_eigengap(const Graph& g, const SpectralOptions& opt = {});

struct ShellSpectralRecord {
    int shell_index = 0;
    std::size_t n_k = 0;
    double d_k = 0.0;
    std::optional<double> lambda2; // absent when every component is tiny
};

struct BucketAggregate {
    std::vector<int> shells;
    std::size_t count = 0; // shells with a defined lambda2
    double mean = 0.0;
    double sd = 0.0;
};

struct ShellEigengapProfile {
    std::vector<ShellSpectralRecord> records; // innermost-first
    BucketAggregate inner, mid, outer;
    std::size_t excluded = 0; // shells with no component of min size
    bool degenerate_buckets = false;
};

ShellEigengapProfile shell_eigengap_profile(const Graph& g, const CoreDecomposition& d,
                                            const SpectralOptions& opt = {});
ShellEigengapProfile shell_eigengap_profile_serial(const Graph& g, const CoreDecomposition& d,
                                                   const SpectralOptions& opt = {});

} // namespace rcc
