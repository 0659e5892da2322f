// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.
#include "rcc/centrality.hpp"
#include "rcc/core_decomp.hpp"
#include "rcc/diffusion.hpp"
#include "rcc/generators.hpp"
#include "rcc/graph.hpp"
#include "rcc/modifier.hpp"
#include "rcc/rcc_detect.hpp"
#include "rcc/robustness.hpp"
#include "rcc/spectral.hpp"
#include "../oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rcc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const char* name, bool ok, const std::string& detail) {
    std::cout << "CRITERION " << n << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void skip(int n, const char* name, const std::string& why) {
    std::cout << "CRITERION " << n << " (" << name << "): SKIP [" << why << "]" << std::endl;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt2(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << x;
    return ss.str();
}

Graph complete(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph rcc_instance(std::uint64_t seed) { return clique_star(20, 30, 5, 1, seed); }

Graph non_rcc_instance(std::uint64_t seed) {
    // 28 heterogeneous cliques; the large-core K8 sits opposite the heavy
    // K6/K7 arc, so the innermost core is never the closeness center
    return ring_of_cliques({8, 4, 4, 4, 5, 4, 4, 5, 4, 4, 6, 7, 6, 7, 6, 7, 6,
                            4, 4, 5, 4, 4, 4, 4, 5, 4, 4, 4},
                           1, seed);
}

void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    int count = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::size_t n = 10 + seed % 51; // up to 60
        double p = 0.05 + 0.3 * static_cast<double>(seed % 7) / 6.0;
        Graph g = erdos_renyi(n, p, seed);
        ++count;
        if (core_numbers(g).core_number != oracle::core_numbers_peeling(g)) {
            ok = false;
            break;
        }
    }
    double dt = seconds_since(t0);
    report(1, "core decomposition oracle", ok && dt < 5.0,
           std::to_string(count) + " graphs in " + fmt2(dt) + "s");
}

void criterion2() {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 200 && ok; ++seed) {
        std::size_t n = 8 + seed % 23; // up to 30
        double p = 0.1 + 0.25 * static_cast<double>(seed % 5) / 4.0;
        Graph g = erdos_renyi(n, p, 1000 + seed);
        auto c = closeness(g);
        auto co = oracle::closeness_bruteforce(g);
        auto b = betweenness(g);
        auto bo = oracle::betweenness_bruteforce(g);
        for (VertexId v = 0; v < n && ok; ++v) {
            if (std::abs(c[v] - co[v]) > 1e-9) ok = false;
            if (std::abs(b[v] - bo[v]) > 1e-9) ok = false;
        }
    }
    report(2, "centrality oracle", ok, "200 graphs vs brute-force enumeration");
}

void criterion3() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 3; n <= 50 && ok; ++n) {
        double expect = static_cast<double>(n) / (static_cast<double>(n) - 1);
        if (std::abs(eigengap(complete(n)).lambda2 - expect) > 1e-8) {
            ok = false;
            detail = "K_" + std::to_string(n);
        }
    }
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    if (std::abs(eigengap(p3).lambda2 - 1.0) > 1e-8) ok = false;
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (std::abs(eigengap(c4).lambda2 - 1.0) > 1e-8) ok = false;

    int tested = 0;
    for (std::uint64_t seed = 0; tested < 100 && seed < 2000 && ok; ++seed) {
        std::size_t n = 4 + seed % 7; // up to 10
        Graph g = erdos_renyi(n, 0.45, 50000 + seed);
        if (connected_components(g).count != 1) continue;
        ++tested;
        double l2 = eigengap(g).lambda2;
        double h = oracle::cheeger_constant(g);
        if (!(l2 / 2 <= h + 1e-9 && h <= std::sqrt(2 * l2) + 1e-9)) {
            ok = false;
            detail = "cheeger sandwich on seed " + std::to_string(seed);
        }
    }
    if (tested < 100) ok = false;
    report(3, "spectral correctness", ok,
           detail.empty() ? "K_n, P3, C4 and 100 cheeger instances" : detail);
}

void criterion4() {
    auto t0 = Clock::now();
    int star_true = 0, ring_false = 0;
    bool profile_ok = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph star = rcc_instance(seed);
        auto v = detect_rcc(star);
        star_true += v.has_rcc;
        // the detected instances must show the stated profile shape; the 5%
        // allowance absorbs seeds that sit on the eigengap boundary
        if (v.has_rcc) {
            if (v.eigengap.inner.count == 0 || v.eigengap.inner.mean <= 0.5) profile_ok = false;
            auto d = core_numbers(star);
            for (const auto& rec : shell_to_core_distance(star, d, d.max_core))
                if (rec.mean_distance > 2.0) profile_ok = false;
        }
        ring_false += !detect_rcc(non_rcc_instance(seed)).has_rcc;
    }
    double dt = seconds_since(t0);
    bool ok = star_true >= 95 && ring_false >= 95 && profile_ok && dt < 60.0;
    report(4, "RCC separation", ok,
           "star " + std::to_string(star_true) + "/100 true, ring " + std::to_string(ring_false) +
               "/100 false, " + fmt2(dt) + "s");
}

void criterion5() {
    double star_sum = 0, ring_sum = 0;
    const int n_inst = 20;
    for (std::uint64_t seed = 0; seed < n_inst; ++seed) {
        Graph star = rcc_instance(seed);
        auto ds = core_numbers(star);
        auto s1 = ds.shell(ds.max_core);
        star_sum += jaccard_overlap(s1, top_k(closeness(star), s1.size()));
        Graph ring = non_rcc_instance(seed);
        auto dr = core_numbers(ring);
        auto r1 = dr.shell(dr.max_core);
        ring_sum += jaccard_overlap(r1, top_k(closeness(ring), r1.size()));
    }
    double star_mean = star_sum / n_inst, ring_mean = ring_sum / n_inst;
    bool ok = star_mean >= 0.4 && ring_mean <= 0.1;
    report(5, "top-core vs top-closeness overlap", ok,
           "star " + fmt2(star_mean) + " (>=0.4), ring " + fmt2(ring_mean) + " (<=0.1)");
}

void criterion6() {
    const char* env = std::getenv("RCC_AS_DATASET");
    std::string path = env ? env : "data/as733.txt";
    std::ifstream probe(path);
    if (!probe) {
        skip(6, "AS dataset check", "dataset not supplied at " + path);
        return;
    }
    probe.close();
    Graph g = load_edge_list_file(path);
    bool ok = g.node_count() == 6474 && g.edge_count() == 13895;
    std::string detail = "n=" + std::to_string(g.node_count()) +
                         " m=" + std::to_string(g.edge_count());
    if (ok) {
        auto d = core_numbers(g);
        auto s1 = d.shell(d.max_core);
        double j = jaccard_overlap(s1, top_k(closeness(g), s1.size()));
        ok = std::abs(j - 0.75) <= 0.1;
        detail += " J_closeness=" + fmt2(j);
    }
    report(6, "AS dataset check", ok, detail);
}

void criterion7() {
    const std::size_t s = 10;
    const int n_inst = 20, n_trials = 10;
    auto half_steps = [&](const Graph& g, const std::vector<VertexId>& seeds) {
        return static_cast<double>(flood_spread(g, seeds).steps_to_fraction.at(0.5));
    };
    double star_core = 0, star_deg = 0, star_rand = 0;
    double ring_core = 0, ring_rand = 0;
    for (std::uint64_t seed = 0; seed < n_inst; ++seed) {
        Graph star = rcc_instance(seed);
        star_core += half_steps(star, select_seeds(star, SeedStrategy::innermost_core, s, seed));
        star_deg += half_steps(star, select_seeds(star, SeedStrategy::top_degree, s, seed));
        for (int t = 0; t < n_trials; ++t)
            star_rand += half_steps(
                star, select_seeds(star, SeedStrategy::random_set, s, 1000 * seed + t));
        Graph ring = non_rcc_instance(seed);
        ring_core += half_steps(ring, select_seeds(ring, SeedStrategy::innermost_core, s, seed));
        for (int t = 0; t < n_trials; ++t)
            ring_rand += half_steps(
                ring, select_seeds(ring, SeedStrategy::random_set, s, 1000 * seed + t));
    }
    star_core /= n_inst;
    star_deg /= n_inst;
    star_rand /= n_inst * n_trials;
    ring_core /= n_inst;
    ring_rand /= n_inst * n_trials;
    bool ok = star_core <= star_deg + 1.0 && star_core < star_rand && ring_core >= ring_rand;
    report(7, "spread direction", ok,
           "star core " + fmt2(star_core) + " deg " + fmt2(star_deg) + " rand " +
               fmt2(star_rand) + "; ring core " + fmt2(ring_core) + " rand " + fmt2(ring_rand));
}

void criterion8() {
    std::vector<double> fractions = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08};
    const int n_pairs = 20;
    std::vector<double> star_tau(fractions.size(), 0.0), ring_tau(fractions.size(), 0.0);
    for (std::uint64_t seed = 0; seed < n_pairs; ++seed) {
        auto rs = robustness_sweep(rcc_instance(seed), Metric::closeness, fractions, 50, 10, seed);
        auto rr =
            robustness_sweep(non_rcc_instance(seed), Metric::closeness, fractions, 50, 10, seed);
        for (std::size_t i = 0; i < fractions.size(); ++i) {
            star_tau[i] += rs[i].tau_mean;
            ring_tau[i] += rr[i].tau_mean;
        }
    }
    bool direction = true;
    std::string detail;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (!(star_tau[i] > ring_tau[i])) direction = false;
        detail += fmt2(star_tau[i] / n_pairs - ring_tau[i] / n_pairs);
        if (i + 1 < fractions.size()) detail += ",";
    }
    // zero-deletion run: a fraction too small to round to a single edge
    Graph g0 = rcc_instance(0);
    double tiny = 0.5 / static_cast<double>(g0.edge_count());
    auto zero = robustness_sweep(g0, Metric::closeness, {tiny}, 50, 10, 0);
    bool zero_exact = zero[0].tau_mean == 1.0 && zero[0].tau_sd == 0.0;
    report(8, "robustness direction", direction && zero_exact, "margins " + detail);
}

void criterion9() {
    // involution at gamma = 1 on a star forest (complete-free top-h)
    std::vector<std::pair<VertexId, VertexId>> e;
    VertexId next = 12;
    for (VertexId c = 0; c < 12; ++c)
        for (int l = 0; l < 6; ++l) e.emplace_back(c, next++);
    Graph forest = Graph::from_edges(static_cast<std::size_t>(next), std::move(e));
    auto [ins, p1] = modify_rcc(forest, 12, 1.0, ModifyMode::insert, 3);
    auto [back, p2] = modify_rcc(ins, 12, 1.0, ModifyMode::remove, 4);
    bool involution = back.edges() == forest.edges() && p1.chosen.size() == 66;

    const int n_seeds = 20;
    int insert_flips = 0, remove_flips = 0;
    double max_da = 0, max_dd = 0;
    auto stat_delta = [&](const Graph& before, const Graph& after) {
        auto a0 = powerlaw_fit(before, 1), a1 = powerlaw_fit(after, 1);
        if (a0 && a1) max_da = std::max(max_da, std::abs(*a1 - *a0));
        double d0 = 2.0 * static_cast<double>(before.edge_count()) /
                    static_cast<double>(before.node_count());
        double d1 = 2.0 * static_cast<double>(after.edge_count()) /
                    static_cast<double>(after.node_count());
        max_dd = std::max(max_dd, std::abs(d1 - d0));
    };
    for (std::uint64_t seed = 0; seed < n_seeds; ++seed) {
        Graph ring = ring_of_cliques({22, 18, 18, 18, 18, 18, 18, 18, 18}, 1, seed);
        bool before = detect_rcc(ring).has_rcc;
        auto [after, plan] = modify_rcc(ring, 30, 0.2, ModifyMode::insert, 777 + seed);
        insert_flips += !before && detect_rcc(after).has_rcc;
        stat_delta(ring, after);

        Graph star = clique_star(18, 30, 5, 1, seed);
        bool sb = detect_rcc(star).has_rcc;
        auto [safter, splan] = modify_rcc(star, 30, 0.2, ModifyMode::remove, 777 + seed);
        remove_flips += sb && !detect_rcc(safter).has_rcc;
        stat_delta(star, safter);
    }
    bool ok = involution && insert_flips >= 18 && remove_flips >= 18 && max_da <= 0.6 &&
              max_dd <= 0.5;
    report(9, "modifier round-trip and flips", ok,
           std::string("involution ") + (involution ? "ok" : "BROKEN") + ", insert " +
               std::to_string(insert_flips) + "/20, remove " + std::to_string(remove_flips) +
               "/20, d_alpha " + fmt2(max_da) + ", d_deg " + fmt2(max_dd));
}

void criterion10() {
    int contained = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = clique_star(60, 4, 3, 1, seed);
        auto d = core_numbers(g);
        auto res = lemma_condition(g, d);
        if (!res.core_index) continue;
        auto c = oracle::closeness_bruteforce(g);
        VertexId best = 0;
        for (VertexId v = 1; v < g.node_count(); ++v)
            if (c[v] > c[best]) best = v;
        if (d.core_number[best] >= *res.core_index) ++contained;
    }
    // the hand-arithmetic two-shell stats must pick the inner shell
    std::vector<LemmaShell> shells(2);
    shells[0] = {9, 10, 9.0, std::log(10.0) / std::log(9.0)};
    shells[1] = {2, 1000, 2.0, std::log(1000.0) / std::log(2.0)};
    std::vector<std::vector<double>> r = {{0.0, 0.0}, {1.0, 0.0}};
    auto x = lemma_scan(shells, r);
    bool arithmetic = x.has_value() && *x == 9;
    report(10, "lemma checker", contained == 20 && arithmetic,
           "core contained " + std::to_string(contained) + "/20, two-shell example " +
               (arithmetic ? "ok" : "BROKEN"));
}

void criterion11() {
#ifndef RCC_KIT_BIN
    skip(11, "CLI determinism", "binary path not configured");
#else
    const std::string bin = RCC_KIT_BIN;
    const std::string dir = "acceptance_scratch";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        report(11, "CLI determinism across thread counts", false, "scratch dir");
        return;
    }
    auto sh = [](const std::string& cmd) {
        int rc = std::system((cmd + " 2>/dev/null").c_str());
        return rc != -1 && WEXITSTATUS(rc) == 0;
    };
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string gen_cmd = " generate --family clique-star --hub-size 20 --satellites 30 "
                                "--satellite-size 5 --links 1 --seed 3 -o ";
    bool ok = sh(bin + gen_cmd + dir + "/g.txt");
    // randomized generation reproduces bytes under a fixed seed
    ok = ok && sh(bin + gen_cmd + dir + "/g2.txt");
    ok = ok && slurp(dir + "/g.txt") == slurp(dir + "/g2.txt") && !slurp(dir + "/g.txt").empty();
    const std::vector<std::string> subs = {
        "spread --seed-size 10 --trials 3 --seed 9 ",
        "robustness --metric closeness --fractions 0.02,0.05 --k 30 --trials 4 --seed 9 ",
        "communities --seed 9 ",
        "centrality --metric betweenness ",
        "modify --h 30 --gamma 0.2 --mode remove --seed 9 ",
        "rcc-detect ",
        "eigengap --per-shell ",
    };
    for (const auto& sub : subs) {
        if (!ok) break;
        bool needs_out = sub.rfind("modify", 0) == 0;
        std::string o1 = dir + "/a.out", o2 = dir + "/b.out";
        std::string tail1 = needs_out ? " -o " + o1 : " > " + o1;
        std::string tail2 = needs_out ? " -o " + o2 : " > " + o2;
        ok = ok && sh(bin + " " + sub + "--threads 1 " + dir + "/g.txt" + tail1);
        ok = ok && sh(bin + " " + sub + "--threads 8 " + dir + "/g.txt" + tail2);
        ok = ok && slurp(o1) == slurp(o2) && !slurp(o1).empty();
        // rerun with the same thread count reproduces bytes as well
        ok = ok && sh(bin + " " + sub + "--threads 8 " + dir + "/g.txt" + tail1);
        ok = ok && slurp(o1) == slurp(o2);
    }
    report(11, "CLI determinism across thread counts", ok, "");
#endif
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
