#pragma once
#include "rcc/core_decomp.hpp"
#include "rcc/graph.hpp"
#include "rcc/spectral.hpp"

#include <optional>
#include <vector>

namespace rcc {

struct RccCriteria {
    double eigengap_threshold = 0.5;  // alpha
    double distance_threshold = 4.0;  // beta, hops
    double target_core_density = 0.8; // minimum density of the reference core C_x
    bool strict = false;              // strict: every shell's lambda2 must clear alpha
    SpectralOptions spectral;
};

struct ShellDensityRecord {
    int shell_index = 0;
    std::size_t n_k = 0;
    double d_k = 0.0;
};

struct DensityProfile {
    std::vector<ShellDensityRecord> records; // innermost-first
    double inner_mean_d = 0.0, outer_mean_d = 0.0;
    double inner_mean_n = 0.0, outer_mean_n = 0.0;
    bool degenerate = false; // a single populated bucket
    // Density increases and size decreases toward the inner shells, compared
    // between the innermost and outermost populated buckets (per-shell noise
    // inside a bucket is tolerated).
    bool monotone = true;
};

DensityProfile density_profile(const Graph& g, const CoreDecomposition& d);

struct ShellDistanceRecord {
    int shell_index = 0;
    double mean_distance = 0.0; // over reachable shell members
    std::size_t reachable = 0;
    std::size_t unreachable = 0;
};

// Mean hop distance from every shell below x to the core C_x (multi-source
// BFS). Throws when C_x is empty.
std::vector<ShellDistanceRecord> shell_to_core_distance(const Graph& g,
                                                        const CoreDecomposition& d, int x);

struct RccVerdict {
    bool has_rcc = false;
    bool property1_ok = false;
    bool property2_ok = false;
    bool property3_ok = false;
    bool degenerate = false; // single-shell graph, trivially its own club
    std::string reason;
    int reference_core = 0; // the x used for distances
    DensityProfile density;
    ShellEigengapProfile eigengap;
    std::vector<ShellDistanceRecord> distances;
    std::vector<VertexId> rcc_members; // innermost shell when the verdict is true
};

RccVerdict detect_rcc(const Graph& g, const RccCriteria& criteria = {});

// Deepest core with internal density >= target, falling back to the
// innermost core.
int reference_core_index(const Graph& g, const CoreDecomposition& d, double target_density);

struct LemmaShell {
    int shell_index = 0;
    std::size_t n_k = 0;
    double d_k = 0.0;
    std::optional<double> estimate; // log n_k / log d_k, absent when d_k <= 1
};

struct LemmaResult {
    std::optional<int> core_index; // lowest-indexed... innermost satisfying shell
    std::vector<LemmaShell> shells; // innermost-first
    std::size_t undefined_shells = 0;
};

// Scans candidate shells innermost-outward (candidates need at least one
// shell below them); returns the first x with
//   log n_y / log d_y > r_{yz} + log n_z / log d_z
// for every shell y < x, with at least one z >= x per y.
LemmaResult lemma_condition(const Graph& g, const CoreDecomposition& d);

// The same scan on injected per-shell stats and a distance matrix
// r(y_index, z_index) over the same innermost-first ordering.
std::optional<int> lemma_scan(const std::vector<LemmaShell>& shells,
                              const std::vector<std::vector<double>>& r);

} // namespace rcc
