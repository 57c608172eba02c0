#pragma once

#include <vector>

#include "critgraph/graph.hpp"

namespace fixture {

/// Order 41, diameter 2, vertex 0 of degree 6 whose residual vertices split
/// into h21 / h22 / h23 vertices with 1 / 2 / 3 neighbours in N(0).
/// h21 + h22 + h23 must be 34.
///
/// Residual layout: a 12-vertex clique D plus 22 "leaf" vertices, each
/// adjacent to 8 vertices of D and to nothing else in the residual, so the
/// leaves are exactly the residual vertices of residual degree 8.
critgraph::Graph partition_graph(int h21, int h22, int h23);

/// Order 40: vertex 0 has 4 neighbours and the distance layers have the
/// given sizes (layer2 + layer3 = 35). Each deeper vertex hangs off one
/// vertex of the previous layer.
critgraph::Graph layered_graph(int layer2, int layer3);

/// K_{2,6}: exactly two degree-6 vertices (0 and 1), non-adjacent, diameter 2.
critgraph::Graph two_nonadjacent_degree6();

/// The two disjoint edges {0,1}, {2,3}.
critgraph::Graph two_disjoint_edges();

} // namespace fixture
