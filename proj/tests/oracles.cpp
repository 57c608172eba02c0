#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using critgraph::DegreeTuple;
using critgraph::Graph;

namespace oracle {

namespace {

std::vector<std::uint32_t> masks(const Graph& g)
{
    if (g.order() > 32)
        throw std::invalid_argument("oracle graphs are limited to 32 vertices");
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v))
                adj[u] |= 1u << v;
    return adj;
}

bool connected_within(const std::vector<std::uint32_t>& adj, std::uint32_t alive)
{
    if (alive == 0)
        return true;
    std::uint32_t seen = alive & -alive;
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

} // namespace

std::vector<DegreeTuple> degseq(int n, int e, int d6)
{
    std::vector<DegreeTuple> out;
    // Scans [0, n]^3, skipping the region where a + b + c already exceeds n.
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; a + b + c <= n; ++c)
                if (a + b + c + d6 == n && 9 * a + 8 * b + 7 * c + 6 * d6 == 2 * e)
                    out.push_back({a, b, c, d6});
    std::sort(out.begin(), out.end(), critgraph::table_order);
    return out;
}

int alpha(const Graph& g)
{
    if (g.order() > 24)
        throw std::invalid_argument("alpha oracle is limited to 24 vertices");
    const auto adj = masks(g);
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (std::uint32_t r = s; r && ok; r &= r - 1)
            ok = (adj[std::countr_zero(r)] & s) == 0;
        if (ok)
            best = std::max(best, std::popcount(s));
    }
    return best;
}

int clique_number(const Graph& g) { return alpha(g.complement()); }

int kappa(const Graph& g)
{
    if (g.order() > 20)
        throw std::invalid_argument("kappa oracle is limited to 20 vertices");
    const auto adj = masks(g);
    const int n = g.order();
    const std::uint32_t all = (1u << n) - 1;
    int best = n - 1;
    for (std::uint32_t cut = 0; cut <= all; ++cut) {
        const int k = std::popcount(cut);
        if (k >= best || n - k < 2)
            continue;
        if (!connected_within(adj, all & ~cut))
            best = k;
    }
    return best;
}

int edge_kappa(const Graph& g)
{
    if (g.order() > 20)
        throw std::invalid_argument("edge_kappa oracle is limited to 20 vertices");
    const auto edges = g.edges();
    const int n = g.order();
    const std::uint32_t all = (1u << n) - 1;
    for (int k = 0; k <= static_cast<int>(edges.size()); ++k) {
        std::vector<bool> pick(edges.size(), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<std::uint32_t> adj(n, 0);
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (!pick[i]) {
                    adj[edges[i].u] |= 1u << edges[i].v;
                    adj[edges[i].v] |= 1u << edges[i].u;
                }
            if (!connected_within(adj, all))
                return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return static_cast<int>(edges.size());
}

int diameter(const Graph& g)
{
    const int n = g.order();
    constexpr int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            d[u][v] = u == v ? 0 : g.adjacent(u, v) ? 1 : inf;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (d[i][j] >= inf)
                return -1;
            best = std::max(best, d[i][j]);
        }
    return best;
}

namespace {

using Adjacency = std::vector<std::uint32_t>;

/// Colour refinement with canonically ranked colours: vertices are
/// coloured by degree, then repeatedly by (colour, sorted neighbour colours).
std::vector<int> refine(const Adjacency& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v)
        colour[v] = std::popcount(adj[v]);
    int classes = -1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (std::uint32_t r = adj[v]; r; r &= r - 1)
                sig[v].second.push_back(colour[std::countr_zero(r)]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<std::pair<int, std::vector<int>>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (static_cast<int>(distinct.size()) == classes)
            return colour;
        classes = static_cast<int>(distinct.size());
    }
}

/// Lexicographically largest upper-triangle code over all vertex orders
/// that list colour classes in colour order.
std::uint64_t canonical_code(const Adjacency& adj)
{
    const int n = static_cast<int>(adj.size());
    const std::vector<int> colour = refine(adj);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return std::pair(colour[x], x) < std::pair(colour[y], y); });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]])
            ++j;
        cells.push_back({i, j});
        i = j;
    }
    std::uint64_t best = 0;
    // Enumerate the product of permutations of each cell, odometer style.
    while (true) {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
        best = std::max(best, code);
        int c = static_cast<int>(cells.size()) - 1;
        while (c >= 0 && !std::next_permutation(order.begin() + cells[c].first, order.begin() + cells[c].second))
            --c;
        if (c < 0)
            break;
    }
    return best;
}

Graph to_graph(const Adjacency& adj)
{
    std::vector<critgraph::Edge> edges;
    const int n = static_cast<int>(adj.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((adj[u] >> v) & 1u)
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

} // namespace

std::vector<Graph> nonisomorphic_graphs(int n)
{
    if (n < 0 || n > 9)
        throw std::invalid_argument("nonisomorphic_graphs supports 0 <= n <= 9");
    std::vector<Adjacency> level{Adjacency{}};
    for (int k = 1; k <= n; ++k) {
        std::map<std::uint64_t, Adjacency> next;
        for (const Adjacency& base : level)
            for (std::uint32_t nbrs = 0; nbrs < (1u << (k - 1)); ++nbrs) {
                Adjacency adj = base;
                adj.push_back(nbrs);
                for (int v = 0; v < k - 1; ++v)
                    if ((nbrs >> v) & 1u)
                        adj[v] |= 1u << (k - 1);
                next.try_emplace(canonical_code(adj), std::move(adj));
            }
        level.clear();
        for (auto& [code, adj] : next)
            level.push_back(std::move(adj));
    }
    std::vector<Graph> out;
    for (const auto& adj : level)
        out.push_back(to_graph(adj));
    return out;
}

std::vector<DegreeTuple> all_tuples(int count)
{
    std::vector<DegreeTuple> out;
    for (int a = 0; a <= count; ++a)
        for (int b = 0; a + b <= count; ++b)
            for (int c = 0; a + b + c <= count; ++c)
                out.push_back({a, b, c, count - a - b - c});
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

bool disconnects(const Graph& g, const std::vector<int>& cut)
{
    const int n = g.order();
    std::vector<bool> removed(n, false);
    for (int v : cut)
        removed[v] = true;
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0)
                start = v;
        }
    if (alive < 2)
        return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (!removed[w] && !seen[w] && g.adjacent(u, w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached < alive;
}

} // namespace oracle
