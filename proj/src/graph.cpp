#include "critgraph/graph.hpp"

#include <algorithm>
#include <limits>

namespace critgraph {

namespace {

void check_order(int n)
{
    if (n < 0 || n > Graph::kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside [0, "
                         + std::to_string(Graph::kMaxVertices) + "]");
}

} // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    check_order(n);
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v)
                             + ") has an endpoint outside [0, " + std::to_string(n) + ")");
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        rows[e.u].insert(e.v);
        rows[e.v].insert(e.u);
    }
    return from_rows(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    Graph g;
    g.n_ = n;
    g.degrees_.resize(n);
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        if (rows[v].universe() != n)
            throw GraphError("row " + std::to_string(v) + " has the wrong universe size");
        if (rows[v].contains(v))
            throw GraphError("self-loop at vertex " + std::to_string(v));
        g.degrees_[v] = rows[v].size();
        degree_sum += g.degrees_[v];
    }
    for (int v = 0; v < n; ++v)
        rows[v].for_each([&](int u) {
            if (!rows[u].contains(v))
                throw GraphError("adjacency is not symmetric at (" + std::to_string(v) + ","
                                 + std::to_string(u) + ")");
        });
    g.edge_count_ = degree_sum / 2;
    g.rows_ = std::move(rows);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("invalid vertex " + std::to_string(v) + " for graph of order " + std::to_string(n_));
}

VertexSet Graph::neighborhood(int v) const
{
    check_vertex(v);
    return rows_[v];
}

VertexSet Graph::closed_neighborhood(int v) const
{
    check_vertex(v);
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
}

int Graph::min_degree() const
{
    return n_ == 0 ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const
{
    return n_ == 0 ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        rows_[u].for_each([&](int v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

Graph Graph::complement() const
{
    std::vector<VertexSet> rows;
    rows.reserve(n_);
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
        VertexSet r = all - rows_[v];
        r.erase(v);
        rows.push_back(r);
    }
    return from_rows(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    InducedSubgraph out;
    out.original = keep.members();
    const int m = static_cast<int>(out.original.size());
    std::vector<int> index(g.order(), -1);
    for (int i = 0; i < m; ++i)
        index[out.original[i]] = i;
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (int i = 0; i < m; ++i)
        (g.row(out.original[i]) & keep).for_each([&](int u) { rows[i].insert(index[u]); });
    out.graph = Graph::from_rows(std::move(rows));
    return out;
}

InducedSubgraph residual(const Graph& g, int v)
{
    return induced_subgraph(g, g.vertices() - g.closed_neighborhood(v));
}

int edges_between(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (a.universe() != g.order() || b.universe() != g.order())
        throw GraphError("vertex sets do not belong to this graph");
    if (a.intersects(b))
        throw GraphError("edges_between requires disjoint vertex sets");
    int total = 0;
    a.for_each([&](int u) { total += g.row(u).intersection_size(b); });
    return total;
}

std::vector<VertexSet> distance_layer_sets(const Graph& g, int v)
{
    g.check_vertex(v);
    std::vector<VertexSet> layers;
    VertexSet seen(g.order());
    VertexSet frontier(g.order());
    frontier.insert(v);
    seen.insert(v);
    while (!frontier.empty()) {
        layers.push_back(frontier);
        VertexSet next(g.order());
        frontier.for_each([&](int u) { next |= g.row(u); });
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return layers;
}

LayerProfile distance_layers(const Graph& g, int v)
{
    LayerProfile profile;
    int reached = 0;
    for (const VertexSet& layer : distance_layer_sets(g, v)) {
        profile.layer_sizes.push_back(layer.size());
        reached += layer.size();
    }
    profile.unreachable_count = g.order() - reached;
    return profile;
}

int Diameter::value() const
{
    if (!value_)
        throw std::logic_error("diameter is infinite");
    return *value_;
}

std::string Diameter::to_string() const
{
    return value_ ? std::to_string(*value_) : "infinite";
}

Diameter diameter(const Graph& g)
{
    if (g.order() == 0)
        throw GraphError("diameter is undefined for the empty graph");
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        const LayerProfile p = distance_layers(g, v);
        if (p.unreachable_count > 0)
            return Diameter::infinite();
        best = std::max(best, static_cast<int>(p.layer_sizes.size()) - 1);
    }
    return Diameter::finite(best);
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || distance_layers(g, 0).unreachable_count == 0;
}

} // namespace critgraph
