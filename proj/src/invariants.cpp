#include "critgraph/invariants.hpp"

#include <algorithm>
#include <limits>

namespace critgraph {

namespace ramsey_constants {

std::optional<int> known_value(int s, int t)
{
    if (s > t)
        std::swap(s, t);
    if (s == 3 && t == 3)
        return 6;
    if (s == 3 && t == 8)
        return 28;
    if (s == 3 && t == 9)
        return 36;
    return std::nullopt;
}

std::optional<int> min_edge_bound(int k, int l, int n)
{
    if (k == 3 && l == 9 && n == 34)
        return 129;
    if (k == 3 && l == 10 && n == 40)
        return 161;
    if (k == 3 && l == 10 && n == 41)
        return 172;
    return std::nullopt;
}

} // namespace ramsey_constants

namespace {

bool extend_clique(const Graph& g, VertexSet candidates, std::vector<int>& current, int s)
{
    if (static_cast<int>(current.size()) == s)
        return true;
    for (int v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
        if (static_cast<int>(current.size()) + candidates.size() < s)
            return false;
        candidates.erase(v);
        current.push_back(v);
        if (extend_clique(g, candidates & g.row(v), current, s))
            return true;
        current.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_triangle(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.row(u).next(u + 1); v >= 0; v = g.row(u).next(v + 1)) {
            const VertexSet common = g.row(u) & g.row(v);
            if (!common.empty()) {
                std::vector<int> w{u, v, common.first()};
                std::sort(w.begin(), w.end());
                return w;
            }
        }
    return std::nullopt;
}

/// Depth-first branch and bound for independent sets. With a target size
/// it stops as soon as a set of that size is found.
class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, std::optional<int> target)
        : g_(g), target_(target), best_size_(target ? *target - 1 : 0)
    {
        cover_masks_.resize(g.order());
    }

    void run()
    {
        current_.clear();
        search(g_.vertices());
    }

    const std::vector<int>& best() const { return best_; }
    bool found() const { return !best_.empty() || (target_ && *target_ <= 0); }

private:
    int degree_in(int v, const VertexSet& remaining) const { return g_.row(v).intersection_size(remaining); }

    void record()
    {
        if (static_cast<int>(current_.size()) <= best_size_)
            return;
        best_ = current_;
        best_size_ = static_cast<int>(best_.size());
        if (target_ && best_size_ >= *target_) {
            best_.resize(*target_);
            done_ = true;
        }
    }

    /// Greedy clique cover of `remaining`; stops counting once `limit` is
    /// exceeded since the exact value no longer matters.
    int clique_cover_bound(const VertexSet& remaining, int limit)
    {
        int classes = 0;
        for (int v = remaining.first(); v >= 0; v = remaining.next(v + 1)) {
            bool placed = false;
            for (int k = 0; k < classes; ++k)
                if (cover_masks_[k].contains(v)) {
                    cover_masks_[k] &= g_.row(v);
                    placed = true;
                    break;
                }
            if (!placed) {
                if (++classes > limit)
                    return classes;
                cover_masks_[classes - 1] = g_.row(v) & remaining;
            }
        }
        return classes;
    }

    void search(VertexSet remaining)
    {
        const std::size_t mark = current_.size();

        // Vertices of degree <= 1 belong to some maximum independent set.
        for (int v = remaining.first(); v >= 0;) {
            if (degree_in(v, remaining) <= 1) {
                current_.push_back(v);
                remaining -= g_.row(v);
                remaining.erase(v);
                v = remaining.first();
            } else {
                v = remaining.next(v + 1);
            }
        }
        record();

        if (!done_ && !remaining.empty()) {
            const int slack = best_size_ - static_cast<int>(current_.size());
            if (clique_cover_bound(remaining, slack) > slack) {
                int branch = -1;
                int branch_degree = -1;
                remaining.for_each([&](int v) {
                    const int d = degree_in(v, remaining);
                    if (d > branch_degree) {
                        branch = v;
                        branch_degree = d;
                    }
                });

                current_.push_back(branch);
                search(remaining - g_.closed_neighborhood(branch));
                current_.pop_back();

                if (!done_) {
                    remaining.erase(branch);
                    search(remaining);
                }
            }
        }
        current_.resize(mark);
    }

    const Graph& g_;
    std::optional<int> target_;
    int best_size_;
    bool done_ = false;
    std::vector<int> current_;
    std::vector<int> best_;
    std::vector<VertexSet> cover_masks_;
};

} // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int s)
{
    if (s < 1)
        throw GraphError("clique size must be at least 1");
    if (s == 3)
        return find_triangle(g);
    std::vector<int> current;
    if (extend_clique(g, g.vertices(), current, s))
        return current;
    return std::nullopt;
}

int clique_number(const Graph& g)
{
    int omega = 0;
    while (omega < g.order() && has_clique(g, omega + 1))
        ++omega;
    return omega;
}

std::vector<int> maximum_independent_set(const Graph& g)
{
    IndependentSetSearch search(g, std::nullopt);
    search.run();
    std::vector<int> best = search.best();
    std::sort(best.begin(), best.end());
    return best;
}

int independence_number(const Graph& g) { return static_cast<int>(maximum_independent_set(g).size()); }

std::optional<std::vector<int>> find_independent_set(const Graph& g, int t)
{
    if (t <= 0)
        return std::vector<int>{};
    if (t > g.order())
        return std::nullopt;
    IndependentSetSearch search(g, t);
    search.run();
    if (static_cast<int>(search.best().size()) < t)
        return std::nullopt;
    std::vector<int> best = search.best();
    std::sort(best.begin(), best.end());
    return best;
}

RamseyCheck is_ramsey_graph(const Graph& g, int s, int t)
{
    if (s < 2 || t < 2)
        throw GraphError("Ramsey bounds must be at least 2");
    RamseyCheck check;
    if (auto clique = find_clique(g, s)) {
        check.ok = false;
        check.failure = RamseyCheck::Failure::clique;
        check.witness = std::move(*clique);
        return check;
    }
    if (auto independent = find_independent_set(g, t)) {
        check.ok = false;
        check.failure = RamseyCheck::Failure::independent_set;
        check.witness = std::move(*independent);
    }
    return check;
}

Diagnostics verify_r39_critical(const Graph& g)
{
    Diagnostics d;
    auto fail = [&](std::string why) {
        d.ok = false;
        d.failures.push_back(std::move(why));
    };
    if (g.order() != 35)
        fail("order is " + std::to_string(g.order()) + ", expected 35");
    if (g.order() > 0 && (!g.is_regular() || g.max_degree() != 8))
        fail("not 8-regular (degrees range " + std::to_string(g.min_degree()) + ".."
             + std::to_string(g.max_degree()) + ")");
    if (auto triangle = find_triangle(g))
        fail("contains a triangle");
    if (has_independent_set(g, 9))
        fail("independence number is at least 9");
    else if (!has_independent_set(g, 8))
        fail("independence number is below 8");
    return d;
}

MantelCheck mantel_check(const Graph& g)
{
    MantelCheck m;
    m.edges = g.edge_count();
    m.bound = g.order() * g.order() / 4;
    m.triangle_free = !find_triangle(g).has_value();
    if (!m.triangle_free) {
        m.note = "graph contains a triangle; bound does not apply";
        return m;
    }
    m.ok = m.edges <= m.bound;
    m.note = m.ok ? (m.edges == m.bound ? "bound is tight" : "within bound") : "edge count exceeds floor(n^2/4)";
    return m;
}

InvariantSummary summarize(const Graph& g)
{
    InvariantSummary s;
    s.order = g.order();
    s.min_degree = g.min_degree();
    s.max_degree = g.max_degree();
    s.independence_number = independence_number(g);
    s.vertex_connectivity = vertex_connectivity(g);
    s.edge_connectivity = edge_connectivity(g);
    s.edge_count = g.edge_count();
    s.diameter = diameter(g);
    s.is_regular = g.is_regular();
    return s;
}

} // namespace critgraph
