#pragma once

#include <cstdint>
#include <span>

#include "critgraph/graph.hpp"

namespace critgraph::gen {

Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star(int leaves);
/// K_{a,b}; vertices 0..a-1 form the first side.
Graph complete_bipartite(int a, int b);
/// Standard labelling: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
Graph petersen();

/// Vertex i ~ j iff (j - i) mod n or (i - j) mod n is in `offsets`.
/// Each offset must lie in [1, n/2]. Throws GraphError otherwise or when
/// `offsets` is empty.
Graph circulant(int n, std::span<const int> offsets);
inline Graph circulant(int n, std::initializer_list<int> offsets)
{
    return circulant(n, std::span<const int>(offsets.begin(), offsets.size()));
}

/// G(n, p) with a seeded 64-bit Mersenne twister.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Triangle-free graph by edge sampling: shuffle all vertex pairs and add
/// each one unless it would close a triangle. The result is maximal
/// triangle-free.
Graph random_triangle_free(int n, std::uint64_t seed);

} // namespace critgraph::gen
