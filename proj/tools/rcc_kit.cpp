// Command-line front end: every analysis writes plot-ready CSV or JSON and
// every file output gets a manifest sidecar for reproducibility.
#include "CLI11.hpp"
#include "json.hpp"

#include "rcc/centrality.hpp"
#include "rcc/community.hpp"
#include "rcc/core_decomp.hpp"
#include "rcc/diffusion.hpp"
#include "rcc/generators.hpp"
#include "rcc/graph.hpp"
#include "rcc/modifier.hpp"
#include "rcc/rcc_detect.hpp"
#include "rcc/robustness.hpp"
#include "rcc/spectral.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace rcc;

namespace {

constexpr const char* kVersion = "rcc-kit 1.0.0";

// shortest round-trip formatting, locale independent
std::string fmt(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, p);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::ostringstream ss;
    ss << in.rdbuf();
    char buf[20];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), fnv1a(ss.str()), 16);
    return std::string(buf, p);
}

struct Output {
    std::string path; // empty = stdout
    std::ostringstream buffer;

    template <typename T>
    Output& operator<<(const T& t) {
        buffer << t;
        return *this;
    }
};

void emit(Output& out, const std::string& command, const json& params,
          const std::string& input_path) {
    if (out.path.empty()) {
        std::cout << out.buffer.str();
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw Error("cannot open " + out.path + " for writing");
    f << out.buffer.str();

    json manifest;
    manifest["command"] = command;
    manifest["parameters"] = params;
    manifest["input_digest"] = input_path.empty() ? "" : file_digest(input_path);
    manifest["tool_version"] = kVersion;
    manifest["timestamp"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    std::ofstream m(out.path + ".manifest.json");
    m << manifest.dump(2) << '\n';
}

std::vector<double> parse_fractions(const std::string& spec) {
    // "a:b:step" inclusive range or a comma list
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double a, b, step;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
            throw Error("bad fraction range: " + spec);
        for (double x = a; x <= b + 1e-12; x += step) out.push_back(x);
    } else {
        std::istringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw Error("no fractions given");
    return out;
}

json verdict_to_json(const RccVerdict& v) {
    json j;
    j["has_rcc"] = v.has_rcc;
    j["property1_ok"] = v.property1_ok;
    j["property2_ok"] = v.property2_ok;
    j["property3_ok"] = v.property3_ok;
    j["degenerate"] = v.degenerate;
    j["reason"] = v.reason;
    j["reference_core"] = v.reference_core;
    json dens = json::array();
    for (const auto& r : v.density.records)
        dens.push_back({{"shell", r.shell_index}, {"n_k", r.n_k}, {"d_k", r.d_k}});
    j["density"] = {{"records", dens},
                    {"inner_mean_d", v.density.inner_mean_d},
                    {"outer_mean_d", v.density.outer_mean_d},
                    {"inner_mean_n", v.density.inner_mean_n},
                    {"outer_mean_n", v.density.outer_mean_n},
                    {"degenerate", v.density.degenerate}};
    json eig = json::array();
    for (const auto& r : v.eigengap.records) {
        json e = {{"shell", r.shell_index}, {"n_k", r.n_k}, {"d_k", r.d_k}};
        if (r.lambda2)
            e["lambda2"] = *r.lambda2;
        else
            e["lambda2"] = nullptr;
        eig.push_back(e);
    }
    j["eigengap"] = {{"records", eig},
                     {"inner_mean", v.eigengap.inner.mean},
                     {"mid_mean", v.eigengap.mid.mean},
                     {"outer_mean", v.eigengap.outer.mean},
                     {"excluded_shells", v.eigengap.excluded}};
    json dist = json::array();
    for (const auto& r : v.distances)
        dist.push_back({{"shell", r.shell_index},
                        {"mean_distance", r.mean_distance},
                        {"reachable", r.reachable},
                        {"unreachable", r.unreachable}});
    j["distances"] = dist;
    j["rcc_members"] = v.rcc_members;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rich centrality club analysis toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int threads = 0;
    if (const char* env = std::getenv("RCC_KIT_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker thread cap (default: all)");

    std::string in_path, out_path;
    std::uint64_t seed = 42;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        sub->fallthrough(); // lets --threads reach the parent app
        if (needs_input) sub->add_option("input", in_path, "edge list file")->required();
        sub->add_option("-o,--out", out_path, "output file (default stdout)");
        sub->add_option("--seed", seed, "RNG seed");
    };

    auto* c_stats = app.add_subcommand("stats", "whole-graph statistics");
    int kmin = 1;
    c_stats->add_option("--kmin", kmin, "power-law fit tail start");
    add_common(c_stats);

    auto* c_cores = app.add_subcommand("cores", "per-vertex core numbers");
    add_common(c_cores);

    auto* c_centrality = app.add_subcommand("centrality", "per-vertex centrality");
    std::string metric_str = "closeness";
    c_centrality->add_option("--metric", metric_str, "degree|closeness|betweenness");
    add_common(c_centrality);

    auto* c_overlap = app.add_subcommand("overlap", "top-core vs top-centrality Jaccard rows");
    add_common(c_overlap);

    auto* c_eigengap = app.add_subcommand("eigengap", "spectral expansion measures");
    bool per_shell = false, bucket_agg = false;
    c_eigengap->add_flag("--per-shell", per_shell, "one row per shell");
    c_eigengap->add_flag("--buckets", bucket_agg, "three-bucket aggregate");
    add_common(c_eigengap);

    auto* c_detect = app.add_subcommand("rcc-detect", "three-property club verdict");
    RccCriteria criteria;
    c_detect->add_option("--alpha", criteria.eigengap_threshold, "eigengap threshold");
    c_detect->add_option("--beta", criteria.distance_threshold, "distance threshold, hops");
    c_detect->add_option("--core-density", criteria.target_core_density,
                         "reference core density target");
    c_detect->add_flag("--strict", criteria.strict, "every shell must clear alpha");
    add_common(c_detect);

    auto* c_distance = app.add_subcommand("distance", "shell-to-core hop distances");
    int core_index = -1;
    c_distance->add_option("--core-index", core_index, "reference core (default innermost)");
    add_common(c_distance);

    auto* c_spread = app.add_subcommand("spread", "flood broadcast comparison");
    std::string strategies = "innermost-core,top-degree,top-closeness,top-betweenness,random";
    std::size_t seed_size = 10, trials = 10;
    c_spread->add_option("--strategies", strategies, "comma list of seed strategies");
    c_spread->add_option("--seed-size", seed_size, "seed set size");
    c_spread->add_option("--trials", trials, "trials per strategy");
    add_common(c_spread);

    auto* c_robust = app.add_subcommand("robustness", "ranking stability under edge deletion");
    std::string fractions_str = "0.01:0.08:0.01";
    std::size_t topk_size = 50, rob_trials = 10;
    std::string rob_metric = "closeness";
    bool giant_only = false;
    c_robust->add_option("--metric", rob_metric, "closeness|betweenness|degree");
    c_robust->add_option("--fractions", fractions_str, "a:b:step or comma list");
    c_robust->add_option("--k", topk_size, "top-k size");
    c_robust->add_option("--trials", rob_trials, "trials per fraction");
    c_robust->add_flag("--giant-only", giant_only, "rank the largest perturbed component only");
    add_common(c_robust);

    auto* c_modify = app.add_subcommand("modify", "insert or remove a club");
    c_modify->set_help_flag("--help", "print help"); // frees -h for the size option
    std::size_t mod_h = 30;
    double gamma = 0.2;
    std::string mode_str = "insert";
    c_modify->add_option("--h", mod_h, "top-degree set size");
    c_modify->add_option("--gamma", gamma, "fraction of candidate pairs");
    c_modify->add_option("--mode", mode_str, "insert|remove");
    add_common(c_modify);
    c_modify->get_option("-o")->required();

    auto* c_comm = app.add_subcommand("communities", "label propagation partition");
    add_common(c_comm);

    auto* c_super = app.add_subcommand("supergraph", "community plus core reduction");
    add_common(c_super);

    auto* c_gen = app.add_subcommand("generate", "synthetic graph families");
    GeneratorSpec spec;
    std::string sizes_str;
    c_gen->add_option("--family", spec.family,
                      "erdos-renyi|powerlaw-config|clique-star|ring-of-cliques")
        ->required();
    c_gen->add_option("--n", spec.n, "vertex count");
    c_gen->add_option("--p", spec.p, "edge probability");
    c_gen->add_option("--exponent", spec.exponent, "power-law exponent");
    c_gen->add_option("--kmin", spec.k_min, "minimum degree");
    c_gen->add_option("--hub-size", spec.hub_size, "hub clique size");
    c_gen->add_option("--satellites", spec.satellite_count, "satellite count");
    c_gen->add_option("--satellite-size", spec.satellite_size, "satellite clique size");
    c_gen->add_option("--links", spec.links_per_satellite, "links per satellite");
    c_gen->add_option("--sizes", sizes_str, "comma list of ring clique sizes");
    c_gen->add_option("--inter", spec.inter_edges, "edges between adjacent cliques");
    add_common(c_gen, false);
    c_gen->get_option("-o")->required();

    auto* c_lemma = app.add_subcommand("lemma", "average-distance core heuristic");
    add_common(c_lemma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // usage errors exit 1; --help/--version exit 0
    }
    set_threads(threads);

    try {
        Output out;
        out.path = out_path;
        json params;
        params["seed"] = seed;
        params["threads"] = threads;
        std::string command;

        auto load = [&]() { return load_edge_list_file(in_path); };

        if (c_stats->parsed()) {
            command = "stats";
            params["kmin"] = kmin;
            Graph g = load();
            auto s = graph_stats(g, kmin);
            out << "nodes,edges,powerlaw_alpha,mean_degree,mean_clustering,mean_betweenness,"
                   "largest_core\n";
            out << s.nodes << ',' << s.edges << ','
                << (s.powerlaw_alpha ? fmt(*s.powerlaw_alpha) : "nan") << ',' << fmt(s.mean_degree)
                << ',' << fmt(s.mean_clustering) << ',' << fmt(s.mean_betweenness) << ','
                << s.largest_core_number << '\n';
        } else if (c_cores->parsed()) {
            command = "cores";
            Graph g = load();
            auto d = core_numbers(g);
            out << "vertex,core\n";
            for (VertexId v = 0; v < g.node_count(); ++v)
                out << g.label(v) << ',' << d.core_number[v] << '\n';
        } else if (c_centrality->parsed()) {
            command = "centrality";
            params["metric"] = metric_str;
            auto metric = metric_from_name(metric_str);
            if (!metric) throw Error("unknown metric: " + metric_str);
            Graph g = load();
            auto vals = centrality(g, *metric);
            out << "vertex,value\n";
            for (VertexId v = 0; v < g.node_count(); ++v)
                out << g.label(v) << ',' << fmt(vals[v]) << '\n';
        } else if (c_overlap->parsed()) {
            command = "overlap";
            Graph g = load();
            auto d = core_numbers(g);
            auto top_core = d.shell(d.max_core);
            out << "metric,k,jaccard\n";
            for (Metric m : {Metric::degree, Metric::closeness, Metric::betweenness}) {
                auto top = top_k(centrality(g, m), top_core.size());
                out << metric_name(m) << ',' << top_core.size() << ','
                    << fmt(jaccard_overlap(top_core, top)) << '\n';
            }
        } else if (c_eigengap->parsed()) {
            command = "eigengap";
            params["per_shell"] = per_shell;
            params["buckets"] = bucket_agg;
            Graph g = load();
            if (per_shell || bucket_agg) {
                auto d = core_numbers(g);
                auto p = shell_eigengap_profile(g, d);
                if (per_shell) {
                    out << "shell,n_k,d_k,lambda2\n";
                    for (const auto& r : p.records)
                        out << r.shell_index << ',' << r.n_k << ',' << fmt(r.d_k) << ','
                            << (r.lambda2 ? fmt(*r.lambda2) : "") << '\n';
                } else {
                    out << "bucket,shells,mean_lambda2,sd_lambda2\n";
                    auto row = [&](const char* name, const BucketAggregate& b) {
                        out << name << ',' << b.count << ',' << fmt(b.mean) << ',' << fmt(b.sd)
                            << '\n';
                    };
                    row("inner", p.inner);
                    row("mid", p.mid);
                    row("outer", p.outer);
                }
            } else {
                auto r = eigengap(g);
                out << "nodes,lambda2,cheeger_lower,cheeger_upper,components\n";
                out << g.node_count() << ',' << fmt(r.lambda2) << ',' << fmt(r.cheeger_lower)
                    << ',' << fmt(r.cheeger_upper) << ',' << r.component_count << '\n';
            }
        } else if (c_detect->parsed()) {
            command = "rcc-detect";
            params["alpha"] = criteria.eigengap_threshold;
            params["beta"] = criteria.distance_threshold;
            params["core_density"] = criteria.target_core_density;
            params["strict"] = criteria.strict;
            Graph g = load();
            out << verdict_to_json(detect_rcc(g, criteria)).dump(2) << '\n';
        } else if (c_distance->parsed()) {
            command = "distance";
            Graph g = load();
            auto d = core_numbers(g);
            int x = core_index < 0 ? d.max_core : core_index;
            params["core_index"] = x;
            out << "shell,mean_distance,reachable,unreachable\n";
            for (const auto& r : shell_to_core_distance(g, d, x))
                out << r.shell_index << ',' << fmt(r.mean_distance) << ',' << r.reachable << ','
                    << r.unreachable << '\n';
        } else if (c_spread->parsed()) {
            command = "spread";
            params["strategies"] = strategies;
            params["seed_size"] = seed_size;
            params["trials"] = trials;
            Graph g = load();
            out << "strategy,trial,fraction,steps\n";
            std::istringstream ss(strategies);
            std::string name;
            while (std::getline(ss, name, ',')) {
                auto strat = seed_strategy_from_name(name);
                if (!strat) throw Error("unknown strategy: " + name);
                for (std::size_t t = 0; t < trials; ++t) {
                    auto seeds =
                        select_seeds(g, *strat, seed_size, seed + 1000 * t);
                    auto r = flood_spread(g, seeds);
                    for (const auto& [f, steps] : r.steps_to_fraction)
                        out << name << ',' << t << ',' << fmt(f) << ',' << steps << '\n';
                }
            }
        } else if (c_robust->parsed()) {
            command = "robustness";
            params["metric"] = rob_metric;
            params["fractions"] = fractions_str;
            params["k"] = topk_size;
            params["trials"] = rob_trials;
            params["giant_only"] = giant_only;
            auto metric = metric_from_name(rob_metric);
            if (!metric) throw Error("unknown metric: " + rob_metric);
            Graph g = load();
            auto res =
                robustness_sweep(g, *metric, parse_fractions(fractions_str), topk_size,
                                 rob_trials, seed, giant_only);
            out << "metric,fraction,k,trials,tau_mean,tau_sd,fragmented_trials\n";
            for (const auto& r : res)
                out << metric_name(r.metric) << ',' << fmt(r.delete_fraction) << ',' << r.k << ','
                    << r.trials << ',' << fmt(r.tau_mean) << ',' << fmt(r.tau_sd) << ','
                    << r.fragmented_trials << '\n';
        } else if (c_modify->parsed()) {
            command = "modify";
            params["h"] = mod_h;
            params["gamma"] = gamma;
            params["mode"] = mode_str;
            ModifyMode mode;
            if (mode_str == "insert")
                mode = ModifyMode::insert;
            else if (mode_str == "remove")
                mode = ModifyMode::remove;
            else
                throw Error("unknown mode: " + mode_str);
            Graph g = load();
            auto [modified, plan] = modify_rcc(g, mod_h, gamma, mode, seed);
            std::ostringstream edge_text;
            write_edge_list(modified, edge_text);
            out << edge_text.str();

            json pj;
            pj["h"] = plan.h;
            pj["gamma"] = plan.gamma;
            pj["mode"] = mode_str;
            pj["rng_seed"] = plan.rng_seed;
            pj["candidate_count"] = plan.candidate_count;
            pj["noop"] = plan.noop;
            json chosen = json::array();
            for (auto [u, v] : plan.chosen)
                chosen.push_back({g.label(u), g.label(v)});
            pj["chosen_edges"] = chosen;
            std::ofstream pf(out_path + ".plan.json");
            pf << pj.dump(2) << '\n';
        } else if (c_comm->parsed()) {
            command = "communities";
            Graph g = load();
            auto p = detect_communities(g, seed);
            out << "vertex,community\n";
            for (VertexId v = 0; v < g.node_count(); ++v)
                out << g.label(v) << ',' << p.community[v] << '\n';
        } else if (c_super->parsed()) {
            command = "supergraph";
            Graph g = load();
            auto sg = supervertex_reduction(g, core_numbers(g), detect_communities(g, seed));
            json j;
            j["nodes"] = json::array();
            for (const auto& s : sg.vertices)
                j["nodes"].push_back({{"id", s.id},
                                      {"is_core", s.is_core},
                                      {"size", s.members.size()},
                                      {"mean_closeness", s.mean_closeness},
                                      {"mean_betweenness", s.mean_betweenness}});
            j["links"] = json::array();
            for (auto [a, b] : sg.edges) j["links"].push_back({{"source", a}, {"target", b}});
            out << j.dump(2) << '\n';
        } else if (c_gen->parsed()) {
            command = "generate";
            spec.rng_seed = seed;
            if (!sizes_str.empty()) {
                std::istringstream ss(sizes_str);
                std::string tok;
                while (std::getline(ss, tok, ',')) spec.sizes.push_back(std::stoul(tok));
            }
            params["spec"] = json::parse(generator_spec_json(spec));
            Graph g = generate(spec);
            std::ostringstream edge_text;
            write_edge_list(g, edge_text);
            out << edge_text.str();
            std::ofstream sf(out_path + ".spec.json");
            sf << generator_spec_json(spec) << '\n';
        } else if (c_lemma->parsed()) {
            command = "lemma";
            Graph g = load();
            auto d = core_numbers(g);
            auto res = lemma_condition(g, d);
            json j;
            if (res.core_index)
                j["core_index"] = *res.core_index;
            else
                j["core_index"] = nullptr;
            j["undefined_shells"] = res.undefined_shells;
            j["shells"] = json::array();
            for (const auto& s : res.shells) {
                json sh = {{"shell", s.shell_index}, {"n_k", s.n_k}, {"d_k", s.d_k}};
                if (s.estimate)
                    sh["distance_estimate"] = *s.estimate;
                else
                    sh["distance_estimate"] = nullptr;
                j["shells"].push_back(sh);
            }
            out << j.dump(2) << '\n';
        }

        emit(out, command, params, in_path);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
