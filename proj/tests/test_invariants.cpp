#include <doctest.h>

#include <random>

#include "critgraph/generators.hpp"
#include "critgraph/invariants.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace critgraph;

TEST_CASE("constants")
{
    CHECK(ramsey_constants::known_value(3, 3) == 6);
    CHECK(ramsey_constants::known_value(3, 8) == 28);
    CHECK(ramsey_constants::known_value(9, 3) == 36);
    CHECK_FALSE(ramsey_constants::known_value(4, 4).has_value());
    CHECK(ramsey_constants::min_edge_bound(3, 9, 34) == 129);
    CHECK(ramsey_constants::min_edge_bound(3, 10, 40) == 161);
    CHECK(ramsey_constants::min_edge_bound(3, 10, 41) == 172);
    CHECK(ramsey_constants::kEdgeUpper41 == 184);
}

TEST_CASE("clique search")
{
    const auto k3 = find_clique(gen::complete(3), 3);
    REQUIRE(k3);
    CHECK(*k3 == std::vector<int>{0, 1, 2});
    CHECK_FALSE(has_clique(gen::cycle(5), 3));
    CHECK_FALSE(has_clique(gen::circulant(13, {1, 5}), 3));
    CHECK(clique_number(gen::complete(6)) == 6);
    CHECK(has_clique(gen::empty(1), 1));
    CHECK_FALSE(has_clique(gen::empty(0), 1));
    CHECK_THROWS(find_clique(gen::cycle(5), 0));
}

TEST_CASE("independence number examples")
{
    CHECK(independence_number(gen::cycle(5)) == 2);
    CHECK(independence_number(gen::petersen()) == 4);
    CHECK(oracle::alpha(gen::petersen()) == 4);
    CHECK(independence_number(gen::empty(7)) == 7);
    CHECK(independence_number(gen::empty(0)) == 0);
    CHECK(independence_number(gen::circulant(13, {1, 5})) == 4);
    CHECK(has_independent_set(gen::petersen(), 4));
    CHECK_FALSE(has_independent_set(gen::petersen(), 5));
    CHECK(has_independent_set(gen::petersen(), 0));
}

TEST_CASE("property: branch and bound alpha equals exhaustive alpha on every graph up to 7 vertices")
{
    // The 8-vertex class (12346 graphs) runs in the acceptance binary.
    for (int n = 0; n <= 7; ++n)
        for (const Graph& g : oracle::nonisomorphic_graphs(n))
            REQUIRE(independence_number(g) == oracle::alpha(g));
}

TEST_CASE("property: alpha on random graphs, with witnesses")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = gen::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng());
        const int a = oracle::alpha(g);
        const std::vector<int> mis = maximum_independent_set(g);
        CHECK(static_cast<int>(mis.size()) == a);
        CHECK(oracle::is_independent(g, mis));
        const auto w = find_independent_set(g, a);
        REQUIRE(w);
        CHECK(static_cast<int>(w->size()) == a);
        CHECK(oracle::is_independent(g, *w));
        CHECK_FALSE(find_independent_set(g, a + 1));
    }
}

TEST_CASE("property: alpha equals clique number of the complement")
{
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = gen::random_graph(n, 0.5, rng());
        CHECK(independence_number(g) == clique_number(g.complement()));
        const auto c = find_clique(g, clique_number(g));
        REQUIRE(c);
        CHECK(oracle::is_clique(g, *c));
        CHECK(clique_number(g) == oracle::clique_number(g));
    }
}

TEST_CASE("connectivity examples")
{
    CHECK(vertex_connectivity(gen::cycle(5)) == 2);
    CHECK(edge_connectivity(gen::cycle(5)) == 2);
    CHECK(vertex_connectivity(gen::petersen()) == 3);
    CHECK(oracle::kappa(gen::petersen()) == 3);
    CHECK(vertex_connectivity(gen::path(3)) == 1);
    CHECK(vertex_connectivity(gen::complete(5)) == 4);
    CHECK_FALSE(minimum_vertex_cut(gen::complete(5)).has_value());
    CHECK(vertex_connectivity(fixture::two_disjoint_edges()) == 0);
    CHECK(edge_connectivity(fixture::two_disjoint_edges()) == 0);
    CHECK(minimum_vertex_cut(fixture::two_disjoint_edges())->empty());
    CHECK(local_vertex_connectivity(gen::petersen(), 0, 2) == 3);
    CHECK_THROWS(vertex_connectivity(gen::empty(1)));
    CHECK_THROWS(edge_connectivity(gen::empty(1)));
    CHECK_THROWS(local_vertex_connectivity(gen::cycle(5), 0, 1));
}

TEST_CASE("property: flow connectivity equals brute force on random connected graphs")
{
    std::mt19937_64 rng(77);
    int tested = 0;
    while (tested < 200) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = gen::random_graph(n, 0.2 + static_cast<double>(rng() % 70) / 100.0, rng());
        if (!is_connected(g))
            continue;
        ++tested;
        const int k = vertex_connectivity(g);
        REQUIRE(k == oracle::kappa(g));
        if (const auto cut = minimum_vertex_cut(g)) {
            CHECK(static_cast<int>(cut->size()) == k);
            CHECK(oracle::disconnects(g, *cut));
        }
    }
}

TEST_CASE("property: edge connectivity equals brute force on small graphs")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = gen::random_graph(n, 0.5, rng());
        CHECK(edge_connectivity(g) == oracle::edge_kappa(g));
    }
}

TEST_CASE("property: kappa <= kappa' <= delta and delta <= 2e/n <= Delta")
{
    std::mt19937_64 rng(8);
    std::vector<Graph> corpus{gen::cycle(5), gen::petersen(), gen::circulant(13, {1, 5}), gen::complete(6),
                              gen::path(4), gen::star(5), gen::complete_bipartite(3, 4)};
    for (int i = 0; i < 100; ++i)
        corpus.push_back(gen::random_graph(2 + static_cast<int>(rng() % 30), 0.3, rng()));
    for (const Graph& g : corpus) {
        const InvariantSummary s = summarize(g);
        CHECK(s.vertex_connectivity <= s.edge_connectivity);
        CHECK(s.edge_connectivity <= s.min_degree);
        CHECK(s.min_degree * s.order <= 2 * s.edge_count);
        CHECK(2 * s.edge_count <= s.max_degree * s.order);
    }
}

TEST_CASE("ramsey predicate")
{
    CHECK(is_ramsey_graph(gen::cycle(5), 3, 3).ok);
    const RamseyCheck k3 = is_ramsey_graph(gen::complete(3), 3, 3);
    CHECK_FALSE(k3.ok);
    CHECK(k3.failure == RamseyCheck::Failure::clique);
    CHECK(oracle::is_clique(gen::complete(3), k3.witness));
    CHECK(is_ramsey_graph(gen::circulant(13, {1, 5}), 3, 5).ok);
    const RamseyCheck e = is_ramsey_graph(gen::empty(6), 3, 3);
    CHECK(e.failure == RamseyCheck::Failure::independent_set);
    CHECK(e.witness.size() == 3);
    CHECK_THROWS(is_ramsey_graph(gen::cycle(5), 1, 3));
}

TEST_CASE("(3,9,35) verifier rejects the wrong graphs")
{
    const Diagnostics c5 = verify_r39_critical(gen::cycle(5));
    CHECK_FALSE(c5.ok);
    CHECK_FALSE(c5.failures.empty());
    CHECK_FALSE(verify_r39_critical(gen::empty(35)).ok);
    // 8-regular and triangle-free, but alpha is far above 8.
    CHECK_FALSE(verify_r39_critical(gen::circulant(35, {1, 3, 5, 7})).ok);
}

TEST_CASE("Mantel bound")
{
    const MantelCheck c5 = mantel_check(gen::cycle(5));
    CHECK(c5.ok);
    CHECK(c5.edges == 5);
    CHECK(c5.bound == 6);
    const MantelCheck k22 = mantel_check(gen::complete_bipartite(2, 2));
    CHECK(k22.ok);
    CHECK(k22.edges == k22.bound);
    const MantelCheck k3 = mantel_check(gen::complete(3));
    CHECK(k3.ok);
    CHECK_FALSE(k3.triangle_free);
    CHECK_FALSE(k3.note.empty());
}

TEST_CASE("summary of the Petersen graph")
{
    const InvariantSummary s = summarize(gen::petersen());
    CHECK(s.order == 10);
    CHECK(s.edge_count == 15);
    CHECK(s.is_regular);
    CHECK(s.independence_number == 4);
    CHECK(s.vertex_connectivity == 3);
    CHECK(s.edge_connectivity == 3);
    CHECK(s.diameter.equals(2));
}
