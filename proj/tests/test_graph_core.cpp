#include <doctest.h>

#include <random>
#include <sstream>

#include "critgraph/generators.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/graph6.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace critgraph;

TEST_CASE("vertex set operations")
{
    VertexSet a(130, {0, 64, 129});
    VertexSet b(130, {64, 65});
    CHECK(a.size() == 3);
    CHECK((a & b).members() == std::vector<int>{64});
    CHECK((a | b).size() == 4);
    CHECK((a - b).members() == std::vector<int>{0, 129});
    CHECK(a.next(1) == 64);
    CHECK(a.next(130) == -1);
    CHECK(a.intersection_size(b) == 1);
    CHECK(VertexSet(130, {64}).is_subset_of(a));
    CHECK_THROWS_AS(VertexSet(10, {10}), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet(1025), std::invalid_argument);
    CHECK(VertexSet::full(70).size() == 70);
}

TEST_CASE("from_edges builds the stated graphs")
{
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == gen::complete(3));

    const Graph e5 = Graph::from_edges(5, {});
    CHECK(e5.edge_count() == 0);
    for (int v = 0; v < 5; ++v)
        CHECK(e5.degree(v) == 0);

    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.is_regular());
    CHECK(c5.min_degree() == 2);
    CHECK(c5 == gen::cycle(5));
}

TEST_CASE("from_edges collapses duplicates and rejects bad input")
{
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(1025, {}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), GraphError);
}

TEST_CASE("from_rows validates symmetry and loops")
{
    std::vector<VertexSet> rows{VertexSet(2, {1}), VertexSet(2)};
    CHECK_THROWS_AS(Graph::from_rows(rows), GraphError);
    std::vector<VertexSet> loop{VertexSet(1, {0})};
    CHECK_THROWS_AS(Graph::from_rows(loop), GraphError);
    std::vector<VertexSet> ok{VertexSet(2, {1}), VertexSet(2, {0})};
    CHECK(Graph::from_rows(ok).edge_count() == 1);
}

TEST_CASE("graph6 hand-encoded examples")
{
    CHECK(parse_graph6("Bw") == gen::complete(3));
    CHECK(to_graph6(gen::complete(3)) == "Bw");
    CHECK(parse_graph6("D??") == gen::empty(5));
    CHECK(parse_graph6(">>graph6<<Bw\n") == gen::complete(3));
    CHECK(to_graph6(gen::empty(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);
    // C5 upper triangle, column-major: 101001 1001 + two padding bits -> 41+63, 36+63.
    CHECK(to_graph6(gen::cycle(5)) == "Dhc");
}

TEST_CASE("graph6 long headers")
{
    const Graph g = gen::cycle(100);
    const std::string text = to_graph6(g);
    CHECK(text[0] == 126);
    CHECK(parse_graph6(text) == g);
    const Graph big = gen::path(300);
    CHECK(parse_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 errors carry the byte offset")
{
    auto offset_of = [](std::string_view text) -> long {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("B") == 1);      // truncated
    CHECK(offset_of("Bww") == 2);    // trailing garbage
    CHECK(offset_of("B\x01") == 1);  // out-of-range byte
    CHECK(offset_of("Bx") == 1);     // non-zero padding bits
    CHECK(offset_of(">>graph6<<Bww") == 12);
    CHECK(offset_of("~??B") >= 0);   // non-canonical long header
}

TEST_CASE("graph6 line reader records per-line errors")
{
    std::istringstream in("Bw\n\nBww\nDhc\n");
    const auto lines = read_graph6_lines(in);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].graph.has_value());
    CHECK_FALSE(lines[1].graph.has_value());
    CHECK(lines[1].line_number == 3);
    CHECK_FALSE(lines[1].error.empty());
    CHECK(*lines[2].graph == gen::cycle(5));
}

TEST_CASE("property: graph6 round trip on 200 random graphs")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 65);
        const double p = static_cast<double>(rng() % 101) / 100.0;
        const Graph g = gen::random_graph(n, p, rng());
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("neighbourhoods")
{
    const Graph c5 = gen::cycle(5);
    CHECK(c5.neighborhood(0).members() == std::vector<int>{1, 4});
    CHECK(c5.closed_neighborhood(0).members() == std::vector<int>{0, 1, 4});
    const Graph e = gen::empty(4);
    CHECK(e.neighborhood(2).empty());
    CHECK(e.closed_neighborhood(2).members() == std::vector<int>{2});
    CHECK(gen::petersen().neighborhood(0).size() == 3);
    CHECK_THROWS_AS(c5.neighborhood(5), GraphError);
}

TEST_CASE("residual graphs keep original names")
{
    const InducedSubgraph c = residual(gen::cycle(5), 0);
    CHECK(c.graph.order() == 2);
    CHECK(c.graph.edge_count() == 1);
    CHECK(c.original == std::vector<int>{2, 3});

    CHECK(residual(gen::complete(3), 1).graph.order() == 0);

    // Each distance-2 vertex of the Petersen graph has one neighbour in N(v)
    // and two in the residual, so the residual is a hexagon.
    const Graph p = gen::petersen();
    for (int v = 0; v < 10; ++v) {
        const InducedSubgraph r = residual(p, v);
        CHECK(r.graph.order() == 6);
        CHECK(r.graph.edge_count() == 6);
        CHECK(r.graph.is_regular());
        CHECK(r.graph.min_degree() == 2);
        CHECK(oracle::diameter(r.graph) == 3);
        for (int u = 0; u < 6; ++u)
            for (int w = 0; w < 6; ++w)
                CHECK(r.graph.adjacent(u, w) == p.adjacent(r.original[u], r.original[w]));
    }
    CHECK_THROWS_AS(residual(p, 10), GraphError);
}

TEST_CASE("distance layers and diameter")
{
    CHECK(distance_layers(gen::cycle(5), 0).layer_sizes == std::vector<int>{1, 2, 2});
    CHECK(diameter(gen::cycle(5)).equals(2));
    CHECK(distance_layers(gen::petersen(), 3).layer_sizes == std::vector<int>{1, 3, 6});
    CHECK(diameter(gen::petersen()).equals(2));
    const Diameter d = diameter(fixture::two_disjoint_edges());
    CHECK(d.is_infinite());
    CHECK(d.to_string() == "infinite");
    CHECK_THROWS_AS(d.value(), std::logic_error);
    const LayerProfile lp = distance_layers(fixture::two_disjoint_edges(), 0);
    CHECK(lp.layer_sizes == std::vector<int>{1, 1});
    CHECK(lp.unreachable_count == 2);
    CHECK(diameter(gen::complete(1)).equals(0));
    CHECK_THROWS(diameter(gen::empty(0)));
}

TEST_CASE("edges between disjoint sets")
{
    const Graph c5 = gen::cycle(5);
    CHECK(edges_between(c5, VertexSet(5, {0}), VertexSet(5, {1, 4})) == 2);
    CHECK(edges_between(gen::empty(6), VertexSet(6, {0, 1}), VertexSet(6, {2, 3})) == 0);
    const Graph p = gen::petersen();
    CHECK(edges_between(p, p.neighborhood(0), p.vertices() - p.closed_neighborhood(0)) == 6);
    CHECK_THROWS_AS(edges_between(c5, VertexSet(5, {0, 1}), VertexSet(5, {1})), GraphError);
}

TEST_CASE("circulant graphs")
{
    CHECK(gen::circulant(5, {1}) == gen::cycle(5));
    CHECK(gen::circulant(5, {1, 2}) == gen::complete(5));
    const Graph c13 = gen::circulant(13, {1, 5});
    CHECK(c13.is_regular());
    CHECK(c13.min_degree() == 4);
    CHECK(oracle::clique_number(c13) == 2);
    CHECK_THROWS_AS(gen::circulant(5, {0}), GraphError);
    CHECK_THROWS_AS(gen::circulant(5, {3}), GraphError);
    CHECK_THROWS_AS(gen::circulant(5, std::span<const int>{}), GraphError);
}

TEST_CASE("random generators are deterministic")
{
    CHECK(gen::random_graph(30, 0.3, 11) == gen::random_graph(30, 0.3, 11));
    CHECK(gen::random_triangle_free(41, 5) == gen::random_triangle_free(41, 5));
    const Graph tf = gen::random_triangle_free(20, 3);
    CHECK(oracle::clique_number(tf) <= 2);
    // Maximality: every non-edge would close a triangle.
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v)
            if (!tf.adjacent(u, v))
                CHECK(tf.row(u).intersects(tf.row(v)));
}

TEST_CASE("property: handshake, layer partition and residual order")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 40);
        const Graph g = gen::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng());
        int degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            degree_sum += g.degree(v);
            CHECK(g.degree(v) <= n - 1);
            CHECK_FALSE(g.adjacent(v, v));
            const LayerProfile lp = distance_layers(g, v);
            int total = lp.unreachable_count;
            for (int s : lp.layer_sizes)
                total += s;
            CHECK(total == n);
            CHECK(lp.layer_sizes[0] == 1);
            CHECK(residual(g, v).graph.order() == n - 1 - g.degree(v));
        }
        CHECK(degree_sum == 2 * g.edge_count());
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

TEST_CASE("property: diameter agrees with Floyd-Warshall")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = gen::random_graph(n, 0.25, rng());
        const Diameter d = diameter(g);
        const int expected = oracle::diameter(g);
        if (expected < 0)
            CHECK(d.is_infinite());
        else
            CHECK(d.equals(expected));
        CHECK(is_connected(g) == (expected >= 0));
    }
}
