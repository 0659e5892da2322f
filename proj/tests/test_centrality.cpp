#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rcc/centrality.hpp"
#include "rcc/generators.hpp"
#include "oracles.hpp"

using namespace rcc;

static Graph star3() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("closeness on the star and K4") {
    auto c = closeness(star3());
    CHECK(c[0] == doctest::Approx(1.0 / 3.0));
    CHECK(c[1] == doctest::Approx(1.0 / 5.0));

    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (double v : closeness(k4)) CHECK(v == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("isolated vertex closeness is zero") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    CHECK(closeness(g)[2] == 0.0);
}

TEST_CASE("betweenness on star and C4") {
    auto b = betweenness(star3());
    CHECK(b[0] == doctest::Approx(3.0));
    CHECK(b[1] == doctest::Approx(0.0));

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (double v : betweenness(c4)) CHECK(v == doctest::Approx(0.5));
}

TEST_CASE("closeness and betweenness match the brute-force oracles") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = erdos_renyi(25, 0.22, seed);
        auto c = closeness(g);
        auto co = oracle::closeness_bruteforce(g);
        auto b = betweenness(g);
        auto bo = oracle::betweenness_bruteforce(g);
        for (VertexId v = 0; v < g.node_count(); ++v) {
            CHECK(c[v] == doctest::Approx(co[v]).epsilon(1e-9));
            CHECK(b[v] == doctest::Approx(bo[v]).epsilon(1e-9));
        }
    }
}

TEST_CASE("serial and parallel kernels agree exactly") {
    Graph g = erdos_renyi(80, 0.08, 4);
    CHECK(closeness(g) == closeness_serial(g));
    auto bp = betweenness(g);
    auto bs = betweenness_serial(g);
    for (VertexId v = 0; v < g.node_count(); ++v)
        CHECK(bp[v] == doctest::Approx(bs[v]).epsilon(1e-12));
}

TEST_CASE("centralities are relabeling invariant") {
    Graph g = erdos_renyi(20, 0.25, 8);
    std::size_t n = g.node_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(static_cast<VertexId>(n - 1 - u), static_cast<VertexId>(n - 1 - v));
    Graph h = Graph::from_edges(n, std::move(edges));
    auto cg = closeness(g), ch = closeness(h);
    auto bg = betweenness(g), bh = betweenness(h);
    for (VertexId v = 0; v < n; ++v) {
        CHECK(cg[v] == doctest::Approx(ch[n - 1 - v]).epsilon(1e-12));
        CHECK(bg[v] == doctest::Approx(bh[n - 1 - v]).epsilon(1e-12));
    }
}

TEST_CASE("top_k selection and tie policy") {
    CHECK(top_k({5, 3, 9}, 1) == std::vector<VertexId>{2});
    CHECK(top_k({1, 1, 1}, 2) == std::vector<VertexId>{0, 1});
    auto c = closeness(star3());
    CHECK(top_k(c, 1) == std::vector<VertexId>{0});
    CHECK(top_k({1, 2}, 0).empty());
    CHECK_THROWS_AS(top_k({1.0}, 2), Error);
}

TEST_CASE("jaccard overlap corner cases") {
    CHECK(jaccard_overlap({0, 1}, {0, 1}) == doctest::Approx(1.0));
    CHECK(jaccard_overlap({0, 1}, {2, 3}) == doctest::Approx(0.0));
    CHECK(jaccard_overlap({}, {}) == doctest::Approx(1.0));
    CHECK(jaccard_overlap({0, 1, 2}, {1, 2, 3}) == doctest::Approx(0.5));
    // symmetry
    CHECK(jaccard_overlap({0, 5, 9}, {5, 7}) == jaccard_overlap({5, 7}, {0, 5, 9}));
}

TEST_CASE("jaccard grows with the intersection on nested sets") {
    std::vector<VertexId> c = {0, 1, 2, 3, 4, 5, 6, 7};
    for (std::size_t cut = 1; cut < c.size(); ++cut) {
        std::vector<VertexId> a(c.begin(), c.begin() + cut);
        std::vector<VertexId> b(c.begin(), c.begin() + cut + 1);
        CHECK(jaccard_overlap(a, c) <= jaccard_overlap(b, c));
    }
}

TEST_CASE("kendall tau fixtures") {
    std::vector<double> r1 = {4, 3, 2, 1};
    CHECK(*kendall_tau(r1, r1) == doctest::Approx(1.0));
    std::vector<double> rev = {1, 2, 3, 4};
    CHECK(*kendall_tau(r1, rev) == doctest::Approx(-1.0));
    // one adjacent swap: 5 concordant, 1 discordant of 6 pairs
    std::vector<double> swapped = {4, 3, 1, 2};
    CHECK(*kendall_tau(r1, swapped) == doctest::Approx(2.0 / 3.0));
    CHECK(!kendall_tau({1.0}, {2.0}).has_value());
}
