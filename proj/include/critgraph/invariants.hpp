#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Constants from the literature that the structural conditions rely on.
namespace ramsey_constants {

/// R(s,t) for the pairs used here: R(3,3)=6, R(3,8)=28, R(3,9)=36.
std::optional<int> known_value(int s, int t);

/// e(k,l,n) lower bounds: e(3,9,34)=129, e(3,10,40)>=161, e(3,10,41)>=172.
std::optional<int> min_edge_bound(int k, int l, int n);

/// Largest edge count considered for a (3,10,41) graph.
inline constexpr int kEdgeUpper41 = 184;

} // namespace ramsey_constants

/// A clique of size s as an ascending vertex list, or nullopt. s must be >= 1.
std::optional<std::vector<int>> find_clique(const Graph& g, int s);
inline bool has_clique(const Graph& g, int s) { return find_clique(g, s).has_value(); }
int clique_number(const Graph& g);

/// Exact maximum independent set by branch and bound. The branching vertex
/// is a maximum-degree vertex of the remaining subgraph (lowest index on
/// ties); the bound is a greedy clique cover of the remaining subgraph.
std::vector<int> maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Independent set of exactly t vertices, or nullopt. Stops at the first
/// one found.
std::optional<std::vector<int>> find_independent_set(const Graph& g, int t);
inline bool has_independent_set(const Graph& g, int t) { return find_independent_set(g, t).has_value(); }

/// Max number of internally vertex-disjoint s-t paths; s and t must be
/// distinct and non-adjacent.
int local_vertex_connectivity(const Graph& g, int s, int t);

/// kappa(g). Complete graphs report n-1. Throws GraphError when n < 2.
int vertex_connectivity(const Graph& g);

/// A vertex cut of size kappa(g), ascending. Empty for disconnected graphs;
/// nullopt for complete graphs, which have no vertex cut.
std::optional<std::vector<int>> minimum_vertex_cut(const Graph& g);

/// kappa'(g). Throws GraphError when n < 2.
int edge_connectivity(const Graph& g);

struct RamseyCheck {
    enum class Failure { none, clique, independent_set };

    bool ok = true;
    Failure failure = Failure::none;
    std::vector<int> witness;
};

/// True iff g has no s-clique and no independent t-set. s, t >= 2.
RamseyCheck is_ramsey_graph(const Graph& g, int s, int t);

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> failures;
};

/// n = 35, 8-regular, triangle-free, alpha = 8.
Diagnostics verify_r39_critical(const Graph& g);

struct MantelCheck {
    bool ok = true;
    bool triangle_free = true;
    int edges = 0;
    int bound = 0;
    std::string note;
};

/// Triangle-free graphs have at most floor(n^2/4) edges. Graphs with a
/// triangle pass vacuously.
MantelCheck mantel_check(const Graph& g);

struct InvariantSummary {
    int order = 0;
    int min_degree = 0;
    int max_degree = 0;
    int independence_number = 0;
    int vertex_connectivity = 0;
    int edge_connectivity = 0;
    int edge_count = 0;
    Diameter diameter = Diameter::infinite();
    bool is_regular = false;
};

/// Requires n >= 2.
InvariantSummary summarize(const Graph& g);

} // namespace critgraph
