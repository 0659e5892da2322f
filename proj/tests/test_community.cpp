#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rcc/community.hpp"
#include "rcc/generators.hpp"

#include <set>

using namespace rcc;

static Graph two_cliques_bridge() {
    // K4 {0..3} and K4 {4..7} joined by 3-4
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j = i + 1; j < 4; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(i + 4, j + 4);
        }
    e.emplace_back(3, 4);
    return Graph::from_edges(8, std::move(e));
}

TEST_CASE("two bridged cliques give two communities") {
    Graph g = two_cliques_bridge();
    auto p = detect_communities(g, 1);
    CHECK(p.count == 2);
    CHECK(p.community[0] == p.community[1]);
    CHECK(p.community[4] == p.community[5]);
    CHECK(p.community[0] != p.community[4]);
}

TEST_CASE("single clique is one community, disjoint cliques split") {
    Graph k5 = clique_star(5, 0, 0, 1, 0);
    CHECK(detect_communities(k5, 0).count == 1);

    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j = i + 1; j < 4; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(i + 4, j + 4);
        }
    Graph two = Graph::from_edges(8, std::move(e));
    CHECK(detect_communities(two, 0).count == 2);
}

TEST_CASE("partition covers every vertex once with dense ids") {
    Graph g = ring_of_cliques({5, 4, 6, 4, 5}, 1, 2);
    auto p = detect_communities(g, 7);
    REQUIRE(p.community.size() == g.node_count());
    std::set<int> ids(p.community.begin(), p.community.end());
    CHECK(static_cast<int>(ids.size()) == p.count);
    CHECK(*ids.begin() == 0);
    CHECK(*ids.rbegin() == p.count - 1);
}

TEST_CASE("every community is internally connected") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = erdos_renyi(40, 0.1, seed);
        auto p = detect_communities(g, seed);
        for (int c = 0; c < p.count; ++c) {
            std::vector<VertexId> mem;
            for (VertexId v = 0; v < g.node_count(); ++v)
                if (p.community[v] == c) mem.push_back(v);
            // BFS within the community
            std::set<VertexId> seen{mem[0]};
            std::vector<VertexId> stack{mem[0]};
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (VertexId w : g.neighbors(u))
                    if (p.community[w] == c && !seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
            CHECK(seen.size() == mem.size());
        }
    }
}

TEST_CASE("determinism per seed") {
    Graph g = erdos_renyi(50, 0.08, 3);
    auto a = detect_communities(g, 42);
    auto b = detect_communities(g, 42);
    CHECK(a.community == b.community);
}

TEST_CASE("core community distribution") {
    // ring of cliques: the innermost core is the biggest clique, one community
    Graph ring = ring_of_cliques({8, 4, 4, 4, 4, 4, 4, 4, 4, 4}, 1, 1);
    auto d = core_numbers(ring);
    auto p = detect_communities(ring, 1);
    auto rows = core_community_distribution(ring, d, p);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].core_members == 8);

    // one clique: a single bar of size n
    Graph k6 = clique_star(6, 0, 0, 1, 0);
    auto rows1 = core_community_distribution(k6, core_numbers(k6), detect_communities(k6, 0));
    REQUIRE(rows1.size() == 1);
    CHECK(rows1[0].core_members == 6);
    CHECK(rows1[0].community_size == 6);
}

TEST_CASE("clique-star core spans multiple communities") {
    Graph star = clique_star(20, 12, 5, 1, 5);
    auto d = core_numbers(star);
    auto p = detect_communities(star, 5);
    auto rows = core_community_distribution(star, d, p);
    std::size_t total = 0;
    for (const auto& r : rows) total += r.core_members;
    CHECK(total == 20);
    // ordered by community size
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i - 1].community_size >= rows[i].community_size);
}

TEST_CASE("supervertex reduction invariants") {
    Graph g = ring_of_cliques({6, 4, 5, 4, 5}, 1, 9);
    auto d = core_numbers(g);
    auto p = detect_communities(g, 9);
    auto sg = supervertex_reduction(g, d, p);
    CHECK(sg.vertices.size() == static_cast<std::size_t>(p.count) + 1);
    CHECK(sg.vertices.back().is_core);
    // no self edges, no duplicates, symmetric by construction
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : sg.edges) {
        CHECK(a < b);
        CHECK(seen.insert({a, b}).second);
    }
    // every vertex in exactly one supervertex
    std::size_t total = 0;
    for (const auto& s : sg.vertices) total += s.members.size();
    CHECK(total == g.node_count());
}

TEST_CASE("single community graph reduces to two supervertices and one superedge") {
    // K5 with one pendant: one community, core = K5
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 5; ++i)
        for (VertexId j = i + 1; j < 5; ++j) e.emplace_back(i, j);
    e.emplace_back(0, 5);
    Graph g = Graph::from_edges(6, std::move(e));
    auto p = detect_communities(g, 0);
    REQUIRE(p.count == 1);
    auto sg = supervertex_reduction(g, core_numbers(g), p);
    CHECK(sg.vertices.size() == 2);
    REQUIRE(sg.edges.size() == 1);
}

TEST_CASE("clique-star core supervertex has the top mean closeness") {
    Graph g = clique_star(20, 12, 5, 1, 3);
    auto sg = supervertex_reduction(g, core_numbers(g), detect_communities(g, 3));
    const auto& core_sv = sg.vertices.back();
    for (const auto& s : sg.vertices) {
        if (s.is_core || s.members.empty()) continue;
        CHECK(core_sv.mean_closeness >= s.mean_closeness);
    }
}
