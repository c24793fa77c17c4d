#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <geomlift/graph.hpp>

#include "oracles.hpp"

using namespace geomlift;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> e;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) e.push_back({u, v});
    return Graph(n, std::move(e));
}

// v1..v12 ear-decomposition figure, 0-based
Graph paper_ear_graph() {
    return Graph(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {5, 6}, {6, 7}, {7, 2},
                      {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 3}});
}

} // namespace

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.has_edge(1, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(Graph::cycle(5)) == 2);
    CHECK(vertex_connectivity(Graph::complete(6)) == 5);
    CHECK(vertex_connectivity(Graph::petersen()) == 3);
    CHECK(oracles::brute_connectivity(Graph::petersen()) == 3);
    CHECK(vertex_connectivity(Graph(1, {})) == 0);
    CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK_THROWS_AS(vertex_connectivity(Graph(0, {})), hypothesis_error);
}

TEST_CASE("Menger consistency against separation oracle") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6); // 4..9
        Graph g = random_graph(n, 0.25 + 0.1 * (rng() % 6), rng);
        INFO("trial " << trial << " n=" << n << " m=" << g.size());
        CHECK(vertex_connectivity(g) == oracles::brute_connectivity(g));
    }
}

TEST_CASE("edge contraction") {
    CHECK(contract_edge(Graph::complete(4), {0, 1}) == Graph::complete(3));
    Graph c4 = contract_edge(Graph::cycle(5), {1, 2});
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    CHECK(vertex_connectivity(c4) == 2);

    Graph p = contract_edge(Graph::petersen(), {0, 5});
    CHECK(p.order() == 9);
    // merged vertex sits at old position of vertex 0
    CHECK(p.degree(0) == 4);

    CHECK_THROWS_AS(contract_edge(Graph::cycle(5), {0, 2}), hypothesis_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(5 + static_cast<int>(rng() % 4), 0.5, rng);
        if (g.size() == 0) continue;
        Edge e = g.edges()[rng() % g.size()];
        Graph h = contract_edge(g, e);
        CHECK(h.order() == g.order() - 1);
        for (auto [u, v] : h.edges()) CHECK(u != v); // simple
    }
}

TEST_CASE("contractible edge search") {
    auto e = find_contractible_edge(Graph::complete(6), 4);
    REQUIRE(e.has_value());

    auto pe = find_contractible_edge(Graph::petersen(), 3);
    REQUIRE(pe.has_value());
    CHECK(vertex_connectivity(contract_edge(Graph::petersen(), *pe)) >= 3);
    // exhaustive: every spoke/rim contraction stays 3-connected in Petersen
    Graph petersen = Graph::petersen();
    for (Edge f : petersen.edges())
        CHECK(vertex_connectivity(contract_edge(petersen, f)) == 3);

    // |V| = k+1 edge case: K_5/e = K_4 is only 3-connected
    CHECK_FALSE(find_contractible_edge(Graph::complete(5), 4).has_value());

    CHECK_THROWS_AS(find_contractible_edge(Graph::cycle(6), 3), hypothesis_error);
}

TEST_CASE("bridges of a cycle") {
    SECTION("K4 with a triangle host") {
        auto bs = bridges_of_cycle(Graph::complete(4), {0, 1, 2});
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].internal_vertices == std::vector<int>{3});
        CHECK(bs[0].attachments == std::vector<int>{0, 1, 2});
        CHECK(bs[0].edges.size() == 3);
    }
    SECTION("C6 plus one chord") {
        Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
        auto bs = bridges_of_cycle(g, {0, 1, 2, 3, 4, 5});
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].trivial());
        CHECK(bs[0].attachments == std::vector<int>{0, 3});
    }
    SECTION("Petersen outer cycle") {
        auto bs = bridges_of_cycle(Graph::petersen(), {0, 1, 2, 3, 4});
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].internal_vertices == std::vector<int>{5, 6, 7, 8, 9});
        CHECK(bs[0].attachments == std::vector<int>{0, 1, 2, 3, 4});
    }
    SECTION("partition property") {
        std::mt19937_64 rng(99);
        int done = 0;
        while (done < 20) {
            Graph g = random_graph(7, 0.5, rng);
            if (!is_k_connected(g, 2)) continue;
            ++done;
            std::vector<int> cyc = ear_decomposition(g).initial_cycle;
            std::set<Edge> cyc_edges;
            for (size_t i = 0; i < cyc.size(); ++i)
                cyc_edges.insert(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
            auto bs = bridges_of_cycle(g, cyc);
            std::set<Edge> seen;
            for (const auto& b : bs)
                for (Edge e : b.edges) {
                    CHECK(!seen.count(e)); // pairwise disjoint edge sets
                    CHECK(!cyc_edges.count(e));
                    seen.insert(e);
                }
            CHECK(seen.size() + cyc_edges.size() == static_cast<size_t>(g.size()));
            // bridges meet pairwise only in cycle vertices
            for (size_t i = 0; i < bs.size(); ++i)
                for (size_t j = i + 1; j < bs.size(); ++j)
                    for (int v : bs[i].internal_vertices)
                        CHECK(!std::binary_search(bs[j].internal_vertices.begin(),
                                                  bs[j].internal_vertices.end(), v));
        }
    }
    CHECK_THROWS_AS(bridges_of_cycle(Graph::complete(4), {0, 1}), hypothesis_error);
    CHECK_THROWS_AS(bridges_of_cycle(Graph::cycle(5), {0, 2, 4}), hypothesis_error);
}

TEST_CASE("bridge pair classification") {
    SECTION("crossing chords are skew") {
        Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
        std::vector<int> c{0, 1, 2, 3};
        auto bs = bridges_of_cycle(g, c);
        REQUIRE(bs.size() == 2);
        CHECK(classify_bridge_pair(bs[0], bs[1], c) == BridgeRelation::skew);
    }
    SECTION("nested chords avoid") {
        Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {0, 4}});
        std::vector<int> c{0, 1, 2, 3, 4, 5};
        auto bs = bridges_of_cycle(g, c);
        REQUIRE(bs.size() == 2);
        CHECK(classify_bridge_pair(bs[0], bs[1], c) == BridgeRelation::avoid);
    }
    SECTION("three bridges on the same triangle are pairwise equivalent") {
        Graph g(6, {{0, 1}, {1, 2}, {2, 0},
                    {3, 0}, {3, 1}, {3, 2},
                    {4, 0}, {4, 1}, {4, 2},
                    {5, 0}, {5, 1}, {5, 2}});
        std::vector<int> c{0, 1, 2};
        auto bs = bridges_of_cycle(g, c);
        REQUIRE(bs.size() == 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j)
                CHECK(classify_bridge_pair(bs[i], bs[j], c) ==
                      BridgeRelation::equivalent_3_bridges);
    }
    SECTION("different hosts rejected") {
        Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
        auto bs = bridges_of_cycle(g, {0, 1, 2, 3});
        CHECK_THROWS_AS(classify_bridge_pair(bs[0], bs[1], {0, 1, 3, 2}), hypothesis_error);
    }
}

TEST_CASE("ear decomposition") {
    SECTION("cycle is a single stage") {
        auto ed = ear_decomposition(Graph::cycle(5));
        CHECK(ed.initial_cycle.size() == 5);
        CHECK(ed.ears.empty());
        CHECK(verify_ear_decomposition(Graph::cycle(5), ed));
    }
    SECTION("K4") {
        auto ed = ear_decomposition(Graph::complete(4));
        CHECK(ed.ears.size() == 2);
        std::string why;
        CHECK(verify_ear_decomposition(Graph::complete(4), ed, &why));
        INFO(why);
    }
    SECTION("figure graph accepts the published decomposition") {
        EarDecomposition ed;
        ed.initial_cycle = {0, 1, 2, 3, 4};
        ed.ears = {{0, 5, 6, 7, 2}, {7, 8, 9, 10, 11, 3}};
        CHECK(verify_ear_decomposition(paper_ear_graph(), ed));
    }
    SECTION("computed decomposition of the figure graph verifies") {
        auto ed = ear_decomposition(paper_ear_graph());
        CHECK(verify_ear_decomposition(paper_ear_graph(), ed));
    }
    SECTION("replay reconstructs on random 2-connected graphs") {
        std::mt19937_64 rng(123);
        int done = 0;
        while (done < 20) {
            Graph g = random_graph(6 + static_cast<int>(rng() % 4), 0.5, rng);
            if (!is_k_connected(g, 2)) continue;
            ++done;
            auto ed = ear_decomposition(g);
            std::string why;
            bool ok = verify_ear_decomposition(g, ed, &why);
            INFO(why);
            CHECK(ok);
        }
    }
    CHECK_THROWS_AS(ear_decomposition(Graph::path(4)), hypothesis_error);
}

TEST_CASE("marked S-decomposition") {
    SECTION("two triangles sharing a vertex") {
        Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
        auto d = marked_s_decomposition(g, {2});
        CHECK(d.components.size() == 2);
        CHECK(d.components[0].marker_edges.empty());
        CHECK(reconstructs(g, d));
    }
    SECTION("K_{2,3} cut on the 2-side") {
        Graph g = Graph::complete_bipartite(2, 3);
        auto d = marked_s_decomposition(g, {0, 1});
        CHECK(d.components.size() == 3);
        for (const auto& comp : d.components) {
            CHECK(comp.vertices.size() == 3);
            CHECK(comp.marker_edges == std::vector<Edge>{{0, 1}});
        }
        CHECK(reconstructs(g, d));
    }
    SECTION("3-cut with triangle marker") {
        // two vertices joined through an independent 3-cut
        Graph g(5, {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
        auto d = marked_s_decomposition(g, {0, 1, 2});
        REQUIRE(d.components.size() == 2);
        for (const auto& comp : d.components) {
            CHECK(comp.marker_edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
            for (Edge e : comp.marker_edges)
                CHECK(std::count(comp.edges.begin(), comp.edges.end(), e) == 1);
        }
        CHECK(reconstructs(g, d));
    }
    CHECK_THROWS_AS(marked_s_decomposition(Graph::complete(4), {0}), hypothesis_error);
}

TEST_CASE("BFS layering") {
    auto l1 = bfs_layers(Graph::complete(4), 2);
    REQUIRE(l1.size() == 2);
    CHECK(l1[0] == std::vector<int>{2});
    CHECK(l1[1].size() == 3);

    auto l2 = bfs_layers(Graph::cycle(6), 0);
    std::vector<size_t> sizes;
    for (auto& l : l2) sizes.push_back(l.size());
    CHECK(sizes == std::vector<size_t>{1, 2, 2, 1});

    auto l3 = bfs_layers(Graph::petersen(), 3);
    sizes.clear();
    for (auto& l : l3) sizes.push_back(l.size());
    CHECK(sizes == std::vector<size_t>{1, 3, 6});

    SECTION("every edge joins same or adjacent layers") {
        std::mt19937_64 rng(5);
        int done = 0;
        while (done < 20) {
            Graph g = random_graph(8, 0.4, rng);
            if (!is_connected(g) || g.order() == 0) continue;
            ++done;
            auto layers = bfs_layers(g, 0);
            std::vector<int> depth(g.order());
            for (size_t i = 0; i < layers.size(); ++i)
                for (int v : layers[i]) depth[v] = static_cast<int>(i);
            for (auto [u, v] : g.edges()) CHECK(std::abs(depth[u] - depth[v]) <= 1);
        }
    }
    CHECK_THROWS_WITH(bfs_layers(Graph(3, {{0, 1}}), 0),
                      Catch::Matchers::ContainsSubstring("unreachable: 2"));
}

TEST_CASE("graph parsing") {
    Graph g = parse_graph("c a comment\np graph 4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);

    Graph j = parse_graph(R"({"n": 3, "edges": [[0,1],[1,2]]})");
    CHECK(j.size() == 2);
    CHECK(graph_from_json(to_json(j)) == j);

    CHECK_THROWS_WITH(parse_graph("p graph 3 1\n1 1\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph("p graph 3 2\n0 1\n0 1\n"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_AS(parse_graph("0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p graph 2 5\n0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,0]]})"), parse_error);
}
