#include <algorithm>
#include <deque>

#include "critgraph/invariants.hpp"

namespace critgraph {

namespace {

/// Small augmenting-path max-flow for the unit-capacity networks below.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : arcs_(nodes) {}

    void add_arc(int from, int to, int capacity, int reverse_capacity = 0)
    {
        arcs_[from].push_back({to, capacity, static_cast<int>(arcs_[to].size())});
        arcs_[to].push_back({from, reverse_capacity, static_cast<int>(arcs_[from].size()) - 1});
    }

    /// Max flow from source to sink, stopping early once `limit` is reached.
    int max_flow(int source, int sink, int limit)
    {
        int flow = 0;
        const int nodes = static_cast<int>(arcs_.size());
        std::vector<std::pair<int, int>> parent(nodes);
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
            parent[source] = {source, -1};
            std::deque<int> queue{source};
            while (!queue.empty() && parent[sink].first < 0) {
                const int u = queue.front();
                queue.pop_front();
                for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
                    const Arc& a = arcs_[u][i];
                    if (a.capacity > 0 && parent[a.to].first < 0) {
                        parent[a.to] = {u, i};
                        queue.push_back(a.to);
                    }
                }
            }
            if (parent[sink].first < 0)
                break;
            // Every path here has bottleneck 1.
            for (int v = sink; v != source;) {
                auto [u, i] = parent[v];
                Arc& a = arcs_[u][i];
                a.capacity -= 1;
                arcs_[v][a.reverse].capacity += 1;
                v = u;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int capacity;
        int reverse;
    };
    std::vector<std::vector<Arc>> arcs_;

public:
    /// Nodes reachable from `source` in the residual network.
    std::vector<bool> reachable(int source) const
    {
        std::vector<bool> seen(arcs_.size(), false);
        std::deque<int> queue{source};
        seen[source] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const Arc& a : arcs_[u])
                if (a.capacity > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
        }
        return seen;
    }
};

FlowNetwork split_network(const Graph& g, int s, int t)
{
    const int n = g.order();
    const int unbounded = n + 1;
    FlowNetwork net(2 * n);
    // in(v) = 2v, out(v) = 2v + 1
    for (int v = 0; v < n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? unbounded : 1);
    for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.u + 1, 2 * e.v, unbounded);
        net.add_arc(2 * e.v + 1, 2 * e.u, unbounded);
    }
    return net;
}

int local_connectivity_bounded(const Graph& g, int s, int t, int limit)
{
    FlowNetwork net = split_network(g, s, t);
    return net.max_flow(2 * s + 1, 2 * t, limit);
}

void require_two_vertices(const Graph& g)
{
    if (g.order() < 2)
        throw GraphError("connectivity needs at least 2 vertices");
}

} // namespace

int local_vertex_connectivity(const Graph& g, int s, int t)
{
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t || g.adjacent(s, t))
        throw GraphError("local vertex connectivity needs distinct non-adjacent vertices");
    return local_connectivity_bounded(g, s, t, g.order());
}

int vertex_connectivity(const Graph& g)
{
    require_two_vertices(g);
    const int n = g.order();
    // kappa <= delta, and delta = n-1 exactly for the complete graph.
    int best = g.min_degree();
    // Even's scheme: some vertex among the first best+1 survives any
    // minimum cut, and every vertex on the far side has a larger index
    // than the first survivor.
    for (int i = 0; i <= best && i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j))
                best = std::min(best, local_connectivity_bounded(g, i, j, best));
    return best;
}

std::optional<std::vector<int>> minimum_vertex_cut(const Graph& g)
{
    require_two_vertices(g);
    const int n = g.order();
    int best = n;
    int best_s = -1;
    int best_t = -1;
    for (int i = 0; i <= best && i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) {
                const int k = local_connectivity_bounded(g, i, j, best);
                if (k < best) {
                    best = k;
                    best_s = i;
                    best_t = j;
                }
            }
    if (best_s < 0)
        return std::nullopt;

    FlowNetwork net = split_network(g, best_s, best_t);
    net.max_flow(2 * best_s + 1, 2 * best_t, n);
    const std::vector<bool> seen = net.reachable(2 * best_s + 1);
    std::vector<int> cut;
    for (int v = 0; v < n; ++v)
        if (seen[2 * v] && !seen[2 * v + 1])
            cut.push_back(v);
    return cut;
}

int edge_connectivity(const Graph& g)
{
    require_two_vertices(g);
    const int n = g.order();
    int best = g.min_degree();
    const std::vector<Edge> edges = g.edges();
    for (int t = 1; t < n && best > 0; ++t) {
        FlowNetwork net(n);
        for (const Edge& e : edges)
            net.add_arc(e.u, e.v, 1, 1);
        best = std::min(best, net.max_flow(0, t, best));
    }
    return best;
}

} // namespace critgraph
