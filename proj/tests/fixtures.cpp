#include "fixtures.hpp"

#include <stdexcept>

#include "critgraph/generators.hpp"

using critgraph::Edge;
using critgraph::Graph;

namespace fixture {

Graph partition_graph(int h21, int h22, int h23)
{
    if (h21 + h22 + h23 != 34 || h21 < 0 || h22 < 0 || h23 < 0)
        throw std::invalid_argument("partition_graph needs h21+h22+h23 = 34");
    constexpr int v = 0;
    auto w = [](int i) { return 1 + i % 6; };
    auto d = [](int k) { return 7 + k; };
    auto leaf = [](int j) { return 19 + j; };

    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i)
        edges.push_back({v, w(i)});
    for (int k = 0; k < 12; ++k)
        for (int l = k + 1; l < 12; ++l)
            edges.push_back({d(k), d(l)});
    // Leaf j misses the four consecutive D vertices j..j+3 (mod 12).
    for (int j = 0; j < 22; ++j)
        for (int k = 0; k < 12; ++k)
            if ((k - j % 12 + 12) % 12 >= 4)
                edges.push_back({leaf(j), d(k)});

    // Common-neighbour counts: D takes the largest ones, leaves the rest.
    std::vector<int> common;
    common.insert(common.end(), h23, 3);
    common.insert(common.end(), h22, 2);
    common.insert(common.end(), h21, 1);
    std::vector<int> residual;
    for (int k = 0; k < 12; ++k)
        residual.push_back(d(k));
    for (int j = 0; j < 22; ++j)
        residual.push_back(leaf(j));
    // Rotate the starting w so every w sees several D vertices.
    int next = 0;
    for (std::size_t i = 0; i < residual.size(); ++i) {
        for (int c = 0; c < common[i]; ++c)
            edges.push_back({residual[i], w(next + c * 2)});
        ++next;
    }
    return Graph::from_edges(41, edges);
}

Graph layered_graph(int layer2, int layer3)
{
    if (layer2 < 4 || layer3 < 0 || layer2 + layer3 != 35)
        throw std::invalid_argument("layered_graph needs layer2 >= 4 and layer2 + layer3 = 35");
    std::vector<Edge> edges;
    for (int i = 1; i <= 4; ++i)
        edges.push_back({0, i});
    const int first2 = 5;
    const int first3 = first2 + layer2;
    for (int j = 0; j < layer2; ++j)
        edges.push_back({first2 + j, 1 + j % 4});
    for (int j = 0; j < layer3; ++j)
        edges.push_back({first3 + j, first2 + j % layer2});
    return Graph::from_edges(40, edges);
}

Graph two_nonadjacent_degree6() { return critgraph::gen::complete_bipartite(2, 6); }

Graph two_disjoint_edges() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

} // namespace fixture
