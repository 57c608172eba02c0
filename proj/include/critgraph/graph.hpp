#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "critgraph/vertex_set.hpp"

namespace critgraph {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with dense bit rows.
class Graph {
public:
    static constexpr int kMaxVertices = VertexSet::kCapacity;

    Graph() = default;

    /// Symmetrizes and de-duplicates. Throws GraphError on a self-loop,
    /// an out-of-range endpoint, or n outside [0, kMaxVertices].
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Builds from explicit rows; rows must already be symmetric and loop-free.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    int degree(int v) const { return degrees_[v]; }
    const VertexSet& row(int v) const { return rows_[v]; }

    /// N(v); throws GraphError on an invalid index.
    VertexSet neighborhood(int v) const;
    /// N[v] = N(v) with v added.
    VertexSet closed_neighborhood(int v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return n_ == 0 || min_degree() == max_degree(); }

    std::vector<Edge> edges() const;
    Graph complement() const;

    void check_vertex(int v) const;

    friend bool operator==(const Graph& lhs, const Graph& rhs)
    {
        return lhs.n_ == rhs.n_ && lhs.rows_ == rhs.rows_;
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<int> degrees_;
};

/// A derived graph plus the map from its vertices back to the parent's.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// The subgraph induced on V(g) minus N[v].
InducedSubgraph residual(const Graph& g, int v);

/// Number of edges with one endpoint in `a` and the other in `b`.
/// The sets must be disjoint.
int edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Distance layers from a base vertex. layer_sizes[i] counts vertices at
/// distance exactly i; unreachable vertices are counted separately.
struct LayerProfile {
    std::vector<int> layer_sizes;
    int unreachable_count = 0;

    friend bool operator==(const LayerProfile&, const LayerProfile&) = default;
};

LayerProfile distance_layers(const Graph& g, int v);
std::vector<VertexSet> distance_layer_sets(const Graph& g, int v);

/// Graph diameter with an explicit infinite state for disconnected graphs.
class Diameter {
public:
    static Diameter finite(int value) { return Diameter(value); }
    static Diameter infinite() { return Diameter(std::nullopt); }

    bool is_finite() const { return value_.has_value(); }
    bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::logic_error when infinite.
    int value() const;
    std::string to_string() const;

    bool equals(int d) const { return value_ && *value_ == d; }

    friend bool operator==(const Diameter&, const Diameter&) = default;

private:
    explicit Diameter(std::optional<int> value) : value_(value) {}
    std::optional<int> value_;
};

/// Requires at least one vertex.
Diameter diameter(const Graph& g);

bool is_connected(const Graph& g);

} // namespace critgraph
