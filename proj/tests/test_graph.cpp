#include "doctest.h"

#include <random>
#include <stdexcept>

#include "semipair/graph.hpp"
#include "semipair/io.hpp"
#include "support/builders.hpp"

using namespace semipair;
using namespace semipair::testing;

TEST_CASE("build_graph basic shapes") {
    Graph p2 = Graph::build(2, {{1, 2}});
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);

    Graph p4 = path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.max_degree() == 2);

    Graph dup = Graph::build(3, {{1, 2}, {1, 2}, {2, 3}});
    CHECK(dup.edge_count() == 2);  // duplicate collapsed
}

TEST_CASE("build_graph rejections") {
    CHECK_THROWS_AS(Graph::build(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(0, {}), std::invalid_argument);
}

TEST_CASE("distance") {
    Graph p4 = path(4);
    CHECK(distance(p4, 1, 4) == 3);
    CHECK(distance(p4, 2, 2) == 0);

    Graph two_edges = Graph::build(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(distance(two_edges, 1, 3).has_value());
}

TEST_CASE("closed neighborhood") {
    Graph p4 = path(4);
    CHECK(closed_neighborhood(p4, 2) == VertexSet::of(4, {1, 2, 3}));
    CHECK(closed_neighborhood(p4, 1) == VertexSet::of(4, {1, 2}));
    Graph k13 = star(4);
    CHECK(closed_neighborhood(k13, 1).size() == 4);
}

TEST_CASE("is_dominating") {
    Graph c4 = cycle(4);
    CHECK_FALSE(is_dominating(c4, VertexSet::of(4, {1})));  // misses 3
    Graph k3 = complete(3);
    CHECK(is_dominating(k3, VertexSet::of(3, {1})));
    Graph p5 = path(5);
    CHECK(is_dominating(p5, VertexSet::of(5, {2, 4})));
    CHECK(is_dominating(p5, VertexSet::of(5, {1, 2, 3, 4, 5})));
}

TEST_CASE("is_connected / is_tree") {
    CHECK(is_connected(path(4)));
    CHECK_FALSE(is_connected(Graph::build(4, {{1, 2}, {3, 4}})));
    CHECK(is_connected(Graph::build(1, {})));
    CHECK(is_tree(path(5)));
    CHECK_FALSE(is_tree(cycle(5)));
    CHECK_FALSE(is_tree(Graph::build(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("vertices_within_2") {
    Graph p5 = path(5);
    CHECK(vertices_within_2(p5, 1) == VertexSet::of(5, {2, 3}));
    CHECK(vertices_within_2(p5, 3) == VertexSet::of(5, {1, 2, 4, 5}));
    Graph k3 = complete(3);
    CHECK(vertices_within_2(k3, 1) == VertexSet::of(3, {2, 3}));
}

TEST_CASE("vertices_within_2 equals the distance formulation on random graphs") {
    std::mt19937_64 seeds(42);
    for (int round = 0; round < 40; ++round) {
        GenSpec spec = GenSpec::parse("gnp:0.35", 2 + static_cast<int>(seeds() % 9), seeds());
        Graph g = generate_graph(spec);
        for (int u = 1; u <= g.vertex_count(); ++u) {
            VertexSet direct(g.vertex_count());
            for (int v = 1; v <= g.vertex_count(); ++v) {
                auto d = distance(g, u, v);
                if (v != u && d && *d <= 2) direct.insert(v);
            }
            CHECK(vertices_within_2(g, u) == direct);
        }
    }
}

TEST_CASE("distance is a metric on connected random graphs") {
    std::mt19937_64 seeds(7);
    for (int round = 0; round < 20; ++round) {
        GenSpec spec = GenSpec::parse("gnp:0.4", 3 + static_cast<int>(seeds() % 6), seeds());
        Graph g = generate_graph(spec);
        int n = g.vertex_count();
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                auto duv = distance(g, u, v);
                REQUIRE(duv.has_value());
                CHECK(*duv == *distance(g, v, u));
                CHECK((*duv == 0) == (u == v));
                for (int w = 1; w <= n; ++w)
                    CHECK(*duv <= *distance(g, u, w) + *distance(g, w, v));
            }
    }
}

TEST_CASE("closed neighborhood always contains the vertex") {
    std::mt19937_64 seeds(11);
    for (int round = 0; round < 20; ++round) {
        GenSpec spec = GenSpec::parse("random-tree", 2 + static_cast<int>(seeds() % 10), seeds());
        Graph g = generate_graph(spec);
        for (int u = 1; u <= g.vertex_count(); ++u) CHECK(closed_neighborhood(g, u).contains(u));
    }
}
