#include "critgraph/generators.hpp"

#include <random>
#include <vector>

namespace critgraph::gen {

namespace {

// The standard distributions are implementation-defined; these keep seeded
// fixtures identical across standard libraries.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

Graph empty(int n) { return Graph::from_edges(n, {}); }

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph cycle(int n)
{
    if (n < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, edges);
}

Graph path(int n)
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph::from_edges(n, edges);
}

Graph star(int leaves)
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.push_back({u, a + v});
    return Graph::from_edges(a + b, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edges(10, edges);
}

Graph circulant(int n, std::span<const int> offsets)
{
    if (offsets.empty())
        throw GraphError("circulant needs at least one offset");
    for (int o : offsets)
        if (o < 1 || o > n / 2)
            throw GraphError("circulant offset " + std::to_string(o) + " outside [1, "
                             + std::to_string(n / 2) + "]");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int o : offsets)
            edges.push_back({v, (v + o) % n});
    return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_interval(rng) < p)
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph random_triangle_free(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng() % i]);

    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const Edge& e : pairs) {
        if (rows[e.u].intersects(rows[e.v]))
            continue;
        rows[e.u].insert(e.v);
        rows[e.v].insert(e.u);
    }
    return Graph::from_rows(std::move(rows));
}

} // namespace critgraph::gen
