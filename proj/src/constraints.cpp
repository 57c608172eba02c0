#include "critgraph/constraints.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "critgraph/invariants.hpp"

namespace critgraph {

namespace {

const std::map<std::string, std::string, std::less<>>& citations()
{
    static const std::map<std::string, std::string, std::less<>> table{
        {"ramsey-core", "no clique of size s and no independent set of size t"},
        {"order", "vertex count equals the target order"},
        {"min-degree", "minimum degree at least the profile bound (>= 6 on 41 vertices, >= 4 on 40)"},
        {"max-degree", "maximum degree equals 9"},
        {"edge-window", "edge count within the profile window (172..184 on 41 vertices, >= 161 on 40)"},
        {"top-degree-count", "at least 16 vertices of degree 9 (handshake with |E| >= 172)"},
        {"degree-sum-pair", "no vertex has two neighbours whose degree sum is at most the threshold (12 / 11)"},
        {"union-neighborhood", "|N(v1) u N(v2)| >= 11 for neighbours v1, v2 of any vertex (unproven in source)"},
        {"diameter-window", "diameter is 2 or 3"},
        {"degree6-census", "at most 6 vertices of degree 6; with diameter 2 at most 2, adjacent if 2"},
        {"degree6-residual-exclusion", "strict: with diameter 2 no degree-6 vertex lies outside N[v] of a degree-6 v"},
        {"degree6-in-neighborhood", "with diameter 2, at most 2 degree-6 vertices in N(v) for degree-6 v"},
        {"min-degree-diameter2", "with diameter 2 the minimum degree is at least 6"},
        {"partition-profile",
         "degree-6 v, diameter 2: H_0 and H_i (i >= 4) empty, 20 <= |H_1| <= 24, 20..24 residual degree-8 "
         "vertices, 44..48 boundary edges"},
        {"layer-sizes", "degree-4 v: 19 <= |layer 2| <= 24 and 11 <= |layer 3| <= 17"},
        {"connectivity", "vertex connectivity at least 6 and equal to the minimum degree"},
        {"smallest-cut-neighborhood", "with diameter 2 every smallest vertex cut is N(v) for some v"},
    };
    return table;
}

ClauseResult make_clause(std::string_view id)
{
    ClauseResult r;
    r.id = std::string(id);
    r.citation = citations().find(id)->second;
    return r;
}

ClauseResult not_applicable(std::string_view id, std::string why)
{
    ClauseResult r = make_clause(id);
    r.verdict = Verdict::not_applicable;
    r.detail = std::move(why);
    return r;
}

ClauseResult fail(ClauseResult r, std::vector<int> witness, std::string detail)
{
    r.verdict = Verdict::fail;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += "; ";
        out += p;
    }
    return out;
}

std::string window_text(const IntWindow& w) { return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]"; }

std::vector<int> vertices_of_degree(const Graph& g, int d)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == d)
            out.push_back(v);
    return out;
}

/// Lazily computed facts shared by the clauses of one report.
class Facts {
public:
    explicit Facts(const Graph& g) : g_(g) {}

    const Diameter& diameter()
    {
        if (!diameter_)
            diameter_ = g_.order() == 0 ? Diameter::infinite() : critgraph::diameter(g_);
        return *diameter_;
    }

    bool diameter_is_two() { return diameter().equals(2); }

private:
    const Graph& g_;
    std::optional<Diameter> diameter_;
};

ClauseResult census_impl(const Graph& g, const TargetParams& params, Facts& facts)
{
    if (!params.max_low_degree_count)
        return not_applicable("degree6-census", "profile sets no degree-6 bound");
    ClauseResult r = make_clause("degree6-census");
    const std::vector<int> low = vertices_of_degree(g, params.low_degree);
    const int count = static_cast<int>(low.size());
    const std::string degree = std::to_string(params.low_degree);
    if (count > *params.max_low_degree_count)
        return fail(r, low,
                    std::to_string(count) + " vertices of degree " + degree + " exceeds "
                        + std::to_string(*params.max_low_degree_count));
    if (params.low_degree_diameter2_rule && g.order() > 0 && facts.diameter_is_two()) {
        if (count > 2)
            return fail(r, low, std::to_string(count) + " vertices of degree " + degree + " with diameter 2");
        if (count == 2 && !g.adjacent(low[0], low[1]))
            return fail(r, low, "the two degree-" + degree + " vertices are not adjacent and diameter is 2");
    }
    r.detail = std::to_string(count) + " vertices of degree " + degree;
    return r;
}

ClauseResult residual_exclusion_impl(const Graph& g, const TargetParams& params, Facts& facts)
{
    if (!params.low_degree_diameter2_rule)
        return not_applicable("degree6-residual-exclusion", "profile has no diameter-2 degree-6 rule");
    if (g.order() == 0 || !facts.diameter_is_two())
        return not_applicable("degree6-residual-exclusion", "diameter is not 2");
    ClauseResult r = make_clause("degree6-residual-exclusion");
    const std::vector<int> low = vertices_of_degree(g, params.low_degree);
    for (int v : low)
        for (int u : low)
            if (u > v && !g.adjacent(u, v))
                return fail(r, {v, u}, "degree-6 vertex " + std::to_string(u) + " lies in the residual of "
                                           + std::to_string(v));
    return r;
}

ClauseResult partition_impl(const PartitionProfile& profile, const Graph& g, const TargetParams& params,
                            Facts& facts)
{
    static constexpr std::string_view id = "partition-profile";
    if (!params.partition)
        return not_applicable(id, "profile has no partition rules");
    const PartitionRules& rules = *params.partition;
    const int v = profile.base_vertex;
    g.check_vertex(v);
    if (g.order() != params.order)
        return not_applicable(id, "order is not " + std::to_string(params.order));
    if (g.degree(v) != rules.base_degree)
        return not_applicable(id, "base vertex degree is not " + std::to_string(rules.base_degree));
    if (!facts.diameter_is_two())
        return not_applicable(id, "diameter is not 2");

    ClauseResult r = make_clause(id);
    std::vector<std::string> problems;
    if (profile.count(0) != 0)
        problems.push_back("|H_0| = " + std::to_string(profile.count(0)) + " (expected 0)");
    for (int i = rules.max_common + 1; i < static_cast<int>(profile.counts.size()); ++i)
        if (profile.count(i) != 0)
            problems.push_back("|H_" + std::to_string(i) + "| = " + std::to_string(profile.count(i))
                               + " (expected 0)");
    if (!rules.single_common.contains(profile.count(1)))
        problems.push_back("|H_1| = " + std::to_string(profile.count(1)) + " outside "
                           + window_text(rules.single_common));

    const InducedSubgraph rest = residual(g, v);
    int residual_degree_count = 0;
    for (int u = 0; u < rest.graph.order(); ++u)
        if (rest.graph.degree(u) == rules.residual_degree)
            ++residual_degree_count;
    if (!rules.residual_degree_count.contains(residual_degree_count))
        problems.push_back(std::to_string(residual_degree_count) + " residual vertices of residual degree "
                           + std::to_string(rules.residual_degree) + " outside "
                           + window_text(rules.residual_degree_count));
    if (!rules.boundary_edges.contains(profile.boundary_edges))
        problems.push_back("boundary edges " + std::to_string(profile.boundary_edges) + " outside "
                           + window_text(rules.boundary_edges));

    if (!problems.empty())
        return fail(r, {v}, join(problems));
    r.witness = {v};
    r.detail = "boundary edges " + std::to_string(profile.boundary_edges);
    return r;
}

ClauseResult layer_impl(const Graph& g, int v, const TargetParams& params)
{
    static constexpr std::string_view id = "layer-sizes";
    if (!params.layers)
        return not_applicable(id, "profile has no layer rules");
    g.check_vertex(v);
    if (g.order() != params.order)
        return not_applicable(id, "order is not " + std::to_string(params.order));
    if (g.degree(v) != params.layers->base_degree)
        return not_applicable(id, "vertex degree is not " + std::to_string(params.layers->base_degree));
    const LayerProfile p = distance_layers(g, v);
    auto size_at = [&](std::size_t i) { return i < p.layer_sizes.size() ? p.layer_sizes[i] : 0; };
    std::vector<std::string> problems;
    if (!params.layers->layer2.contains(size_at(2)))
        problems.push_back("|layer 2| = " + std::to_string(size_at(2)) + " outside "
                           + window_text(params.layers->layer2));
    if (!params.layers->layer3.contains(size_at(3)))
        problems.push_back("|layer 3| = " + std::to_string(size_at(3)) + " outside "
                           + window_text(params.layers->layer3));
    ClauseResult r = make_clause(id);
    if (!problems.empty())
        return fail(r, {v}, join(problems));
    r.witness = {v};
    return r;
}

ClauseResult connectivity_impl(const Graph& g, const TargetParams& params, Facts& facts)
{
    static constexpr std::string_view id = "connectivity";
    if (!params.min_connectivity)
        return not_applicable(id, "profile sets no connectivity bound");
    if (g.order() < 2)
        return not_applicable(id, "fewer than 2 vertices");
    if (params.connectivity_needs_diameter2 && !facts.diameter_is_two())
        return not_applicable(id, "diameter is not 2");
    ClauseResult r = make_clause(id);
    const int kappa = vertex_connectivity(g);
    const int delta = g.min_degree();
    std::vector<std::string> problems;
    if (kappa < *params.min_connectivity)
        problems.push_back("kappa = " + std::to_string(kappa) + " < " + std::to_string(*params.min_connectivity));
    if (kappa != delta)
        problems.push_back("kappa = " + std::to_string(kappa) + " differs from min degree " + std::to_string(delta));
    const std::string summary = "kappa = " + std::to_string(kappa) + ", min degree = " + std::to_string(delta);
    if (!problems.empty())
        return fail(r, minimum_vertex_cut(g).value_or(std::vector<int>{}), join(problems));
    r.detail = summary;
    return r;
}

ClauseResult diameter_impl(const Graph& g, const TargetParams& params, Facts& facts)
{
    static constexpr std::string_view id = "diameter-window";
    if (!params.diameter_window)
        return not_applicable(id, "profile sets no diameter window");
    if (g.order() == 0)
        return not_applicable(id, "empty graph");
    ClauseResult r = make_clause(id);
    const Diameter& d = facts.diameter();
    if (d.is_finite() && params.diameter_window->contains(d.value())) {
        r.detail = "diameter " + d.to_string();
        return r;
    }
    // Witness: a pair realising the diameter (or an unreachable pair).
    for (int u = 0; u < g.order(); ++u) {
        const std::vector<VertexSet> layers = distance_layer_sets(g, u);
        int reached = 0;
        for (const auto& l : layers)
            reached += l.size();
        if (reached < g.order()) {
            const VertexSet far = g.vertices() - [&] {
                VertexSet s(g.order());
                for (const auto& l : layers)
                    s |= l;
                return s;
            }();
            return fail(r, {u, far.first()}, "graph is disconnected (diameter infinite)");
        }
        if (d.is_finite() && static_cast<int>(layers.size()) - 1 == d.value())
            return fail(r, {u, layers.back().first()},
                        "diameter " + d.to_string() + " outside " + window_text(*params.diameter_window));
    }
    return fail(r, {}, "diameter " + d.to_string() + " outside " + window_text(*params.diameter_window));
}

ClauseResult cut_impl(const Graph& g, CutMode mode, long long budget)
{
    static constexpr std::string_view id = "smallest-cut-neighborhood";
    if (g.order() < 2)
        return not_applicable(id, "fewer than 2 vertices");
    const std::optional<std::vector<int>> some_cut = minimum_vertex_cut(g);
    if (!some_cut)
        return not_applicable(id, "complete graph has no vertex cut");
    const int n = g.order();
    const int kappa = static_cast<int>(some_cut->size());
    ClauseResult r = make_clause(id);

    if (mode == CutMode::witness) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == kappa) {
                std::vector<int> w{v};
                g.row(v).for_each([&](int u) { w.push_back(u); });
                r.witness = std::move(w);
                r.detail = "N(" + std::to_string(v) + ") is a minimum vertex cut of size " + std::to_string(kappa);
                return r;
            }
        return fail(r, *some_cut,
                    "no vertex has degree kappa = " + std::to_string(kappa) + ", so no N(v) is a minimum cut");
    }

    // Exhaustive: C(n, kappa) subsets.
    long double subsets = 1;
    for (int i = 0; i < kappa; ++i)
        subsets = subsets * (n - i) / (i + 1);
    if (subsets > static_cast<long double>(budget)) {
        r.verdict = Verdict::budget_exceeded;
        r.detail = "C(" + std::to_string(n) + ", " + std::to_string(kappa) + ") exceeds budget "
                   + std::to_string(budget);
        return r;
    }
    std::vector<int> pick(kappa);
    for (int i = 0; i < kappa; ++i)
        pick[i] = i;
    long long checked = 0;
    while (true) {
        ++checked;
        VertexSet removed(n, std::span<const int>(pick));
        const VertexSet rest = g.vertices() - removed;
        // Disconnected iff BFS from the first survivor misses someone.
        VertexSet seen(n);
        VertexSet frontier(n);
        frontier.insert(rest.first());
        seen |= frontier;
        while (!frontier.empty()) {
            VertexSet next(n);
            frontier.for_each([&](int u) { next |= g.row(u); });
            next &= rest;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        if (seen.size() < rest.size()) {
            bool is_neighborhood = false;
            for (int v = 0; v < n && !is_neighborhood; ++v)
                is_neighborhood = g.row(v) == removed;
            if (!is_neighborhood)
                return fail(r, pick, "minimum vertex cut is not the neighbourhood of any vertex");
        }
        int i = kappa - 1;
        while (i >= 0 && pick[i] == n - kappa + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < kappa; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    r.detail = "checked " + std::to_string(checked) + " subsets of size " + std::to_string(kappa);
    return r;
}

} // namespace

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::not_applicable:
        return "not-applicable";
    case Verdict::budget_exceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

TargetParams TargetParams::gamma41()
{
    TargetParams p;
    p.name = "gamma41";
    p.clique_bound = 3;
    p.independence_bound = 10;
    p.order = 41;
    p.neighbor_degree_sum_threshold = 12;
    p.degree_window = IntWindow{6, 9};
    p.edge_window = IntWindow{172, 184};
    p.min_top_degree_count = 16;
    p.diameter_window = IntWindow{2, 3};
    p.max_low_degree_count = 6;
    p.low_degree_diameter2_rule = true;
    p.partition = PartitionRules{};
    p.min_connectivity = 6;
    return p;
}

TargetParams TargetParams::omega40()
{
    TargetParams p;
    p.name = "omega40";
    p.clique_bound = 3;
    p.independence_bound = 10;
    p.order = 40;
    p.neighbor_degree_sum_threshold = 11;
    p.degree_window = IntWindow{4, 9};
    // No upper edge bound is derived for 40 vertices beyond max degree 9.
    p.edge_window = IntWindow{161, 9 * 40 / 2};
    p.union_neighborhood_bound = 11;
    p.diameter_window = IntWindow{2, 3};
    p.max_low_degree_in_neighborhood = 2;
    p.min_degree_when_diameter2 = 6;
    p.layers = LayerRules{};
    p.min_connectivity = 6;
    p.connectivity_needs_diameter2 = true;
    p.smallest_cut_rule = true;
    return p;
}

TargetParams TargetParams::custom(int clique_bound, int independence_bound, int order)
{
    if (clique_bound < 2 || independence_bound < 2 || order < 0 || order > Graph::kMaxVertices)
        throw std::invalid_argument("custom profile needs s, t >= 2 and 0 <= n <= 1024");
    TargetParams p;
    p.name = "custom(" + std::to_string(clique_bound) + "," + std::to_string(independence_bound) + ","
             + std::to_string(order) + ")";
    p.clique_bound = clique_bound;
    p.independence_bound = independence_bound;
    p.order = order;
    p.extrapolated = true;
    return p;
}

TargetParams TargetParams::parse(std::string_view spec)
{
    if (spec == "gamma41")
        return gamma41();
    if (spec == "omega40")
        return omega40();
    constexpr std::string_view prefix = "custom:";
    if (spec.starts_with(prefix)) {
        spec.remove_prefix(prefix.size());
        int values[3];
        for (int i = 0; i < 3; ++i) {
            const std::size_t comma = spec.find(',');
            const std::string_view part = spec.substr(0, comma);
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), values[i]);
            if (ec != std::errc{} || ptr != part.data() + part.size() || (i < 2) == (comma == std::string_view::npos))
                throw std::invalid_argument("custom profile must look like custom:s,t,n");
            spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        }
        return custom(values[0], values[1], values[2]);
    }
    throw std::invalid_argument("unknown profile '" + std::string(spec) + "' (gamma41, omega40, custom:s,t,n)");
}

ClauseResult degree_sum_pair_ok(const Graph& g, int threshold)
{
    ClauseResult r = make_clause("degree-sum-pair");
    for (int v = 0; v < g.order(); ++v) {
        int first = -1;
        int second = -1;
        g.row(v).for_each([&](int u) {
            if (first < 0 || g.degree(u) < g.degree(first)) {
                second = first;
                first = u;
            } else if (second < 0 || g.degree(u) < g.degree(second)) {
                second = u;
            }
        });
        if (second >= 0 && g.degree(first) + g.degree(second) <= threshold)
            return fail(r, {v, first, second},
                        "neighbours " + std::to_string(first) + " and " + std::to_string(second) + " of "
                            + std::to_string(v) + " have degree sum "
                            + std::to_string(g.degree(first) + g.degree(second)) + " <= " + std::to_string(threshold));
    }
    return r;
}

ClauseResult union_neighborhood_ok(const Graph& g, int bound)
{
    ClauseResult r = make_clause("union-neighborhood");
    for (int v = 0; v < g.order(); ++v) {
        const std::vector<int> nbrs = g.row(v).members();
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int size = (g.row(nbrs[i]) | g.row(nbrs[j])).size();
                if (size < bound)
                    return fail(r, {v, nbrs[i], nbrs[j]},
                                "|N(" + std::to_string(nbrs[i]) + ") u N(" + std::to_string(nbrs[j])
                                    + ")| = " + std::to_string(size) + " < " + std::to_string(bound));
            }
    }
    return r;
}

ClauseResult degree6_census_ok(const Graph& g, const TargetParams& params)
{
    Facts facts(g);
    return census_impl(g, params, facts);
}

ClauseResult residual_degree6_exclusion_ok(const Graph& g, const TargetParams& params)
{
    Facts facts(g);
    return residual_exclusion_impl(g, params, facts);
}

int PartitionProfile::residual_size() const
{
    int total = 0;
    for (int c : counts)
        total += c;
    return total;
}

PartitionProfile PartitionProfile::from_counts(int base_vertex, std::vector<int> counts)
{
    PartitionProfile p;
    p.base_vertex = base_vertex;
    p.counts = std::move(counts);
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
        if (p.counts[i] < 0)
            throw std::invalid_argument("partition counts must be non-negative");
        p.boundary_edges += static_cast<int>(i) * p.counts[i];
    }
    return p;
}

PartitionProfile neighborhood_partition(const Graph& g, int v)
{
    const VertexSet nbrs = g.neighborhood(v);
    const VertexSet rest = g.vertices() - g.closed_neighborhood(v);
    std::vector<int> counts(g.max_degree() + 1, 0);
    rest.for_each([&](int u) { ++counts[g.row(u).intersection_size(nbrs)]; });
    PartitionProfile p = PartitionProfile::from_counts(v, std::move(counts));
    if (p.boundary_edges != edges_between(g, nbrs, rest))
        throw std::logic_error("partition profile is inconsistent with the boundary edge count");
    return p;
}

ClauseResult partition_constraints_ok(const PartitionProfile& profile, const Graph& g, const TargetParams& params)
{
    Facts facts(g);
    return partition_impl(profile, g, params, facts);
}

ClauseResult layer_size_ok(const Graph& g, int v, const TargetParams& params) { return layer_impl(g, v, params); }

ClauseResult connectivity_clauses_ok(const Graph& g, const TargetParams& params)
{
    Facts facts(g);
    return connectivity_impl(g, params, facts);
}

ClauseResult smallest_cut_is_neighborhood(const Graph& g, CutMode mode, long long budget)
{
    return cut_impl(g, mode, budget);
}

bool CriticalityReport::overall_pass() const
{
    return std::none_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.failed(); });
}

const ClauseResult* CriticalityReport::find(std::string_view id) const
{
    for (const auto& c : clauses)
        if (c.id == id)
            return &c;
    return nullptr;
}

const std::vector<std::string>& clause_ids()
{
    static const std::vector<std::string> ids{
        "ramsey-core",
        "order",
        "min-degree",
        "max-degree",
        "edge-window",
        "top-degree-count",
        "degree-sum-pair",
        "union-neighborhood",
        "diameter-window",
        "degree6-census",
        "degree6-residual-exclusion",
        "degree6-in-neighborhood",
        "min-degree-diameter2",
        "partition-profile",
        "layer-sizes",
        "connectivity",
        "smallest-cut-neighborhood",
    };
    return ids;
}

CriticalityReport full_report(const Graph& g, const TargetParams& params, const ReportOptions& options)
{
    CriticalityReport report;
    report.target = params;
    Facts facts(g);
    const bool order_matches = g.order() == params.order;

    auto evaluate = [&](const std::string& id) -> ClauseResult {
        if (id == "ramsey-core") {
            ClauseResult r = make_clause(id);
            const RamseyCheck check = is_ramsey_graph(g, params.clique_bound, params.independence_bound);
            if (check.failure == RamseyCheck::Failure::clique)
                return fail(r, check.witness, "clique of size " + std::to_string(params.clique_bound));
            if (check.failure == RamseyCheck::Failure::independent_set)
                return fail(r, check.witness,
                            "independent set of size " + std::to_string(params.independence_bound));
            return r;
        }
        if (id == "order") {
            ClauseResult r = make_clause(id);
            if (!order_matches)
                return fail(r, {},
                            "order " + std::to_string(g.order()) + ", target " + std::to_string(params.order));
            return r;
        }
        if (!order_matches)
            return not_applicable(id, "order " + std::to_string(g.order()) + " differs from target "
                                          + std::to_string(params.order));

        if (id == "min-degree") {
            if (!params.degree_window)
                return not_applicable(id, "profile sets no degree window");
            ClauseResult r = make_clause(id);
            std::vector<int> low;
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) < params.degree_window->lo)
                    low.push_back(v);
            if (!low.empty())
                return fail(r, low,
                            std::to_string(low.size()) + " vertices below degree "
                                + std::to_string(params.degree_window->lo) + ", min degree "
                                + std::to_string(g.min_degree()));
            r.detail = "min degree " + std::to_string(g.min_degree());
            return r;
        }
        if (id == "max-degree") {
            if (!params.degree_window)
                return not_applicable(id, "profile sets no degree window");
            ClauseResult r = make_clause(id);
            const int top = params.degree_window->hi;
            std::vector<int> high;
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) > top)
                    high.push_back(v);
            if (!high.empty())
                return fail(r, high,
                            std::to_string(high.size()) + " vertices above degree " + std::to_string(top)
                                + ", max degree " + std::to_string(g.max_degree()));
            if (g.max_degree() != top)
                return fail(r, {}, "max degree " + std::to_string(g.max_degree()) + " < " + std::to_string(top));
            return r;
        }
        if (id == "edge-window") {
            if (!params.edge_window)
                return not_applicable(id, "profile sets no edge window");
            ClauseResult r = make_clause(id);
            if (!params.edge_window->contains(g.edge_count()))
                return fail(r, {},
                            std::to_string(g.edge_count()) + " edges outside " + window_text(*params.edge_window));
            r.detail = std::to_string(g.edge_count()) + " edges";
            return r;
        }
        if (id == "top-degree-count") {
            if (!params.min_top_degree_count || !params.degree_window)
                return not_applicable(id, "profile sets no top-degree count");
            ClauseResult r = make_clause(id);
            const int count = static_cast<int>(vertices_of_degree(g, params.degree_window->hi).size());
            if (count < *params.min_top_degree_count)
                return fail(r, {},
                            std::to_string(count) + " vertices of degree " + std::to_string(params.degree_window->hi)
                                + " < " + std::to_string(*params.min_top_degree_count));
            r.detail = std::to_string(count) + " vertices of top degree";
            return r;
        }
        if (id == "degree-sum-pair") {
            if (!params.neighbor_degree_sum_threshold)
                return not_applicable(id, "profile sets no degree-sum threshold");
            return degree_sum_pair_ok(g, *params.neighbor_degree_sum_threshold);
        }
        if (id == "union-neighborhood") {
            if (!params.union_neighborhood_bound)
                return not_applicable(id, "profile sets no union bound");
            return union_neighborhood_ok(g, *params.union_neighborhood_bound);
        }
        if (id == "diameter-window")
            return diameter_impl(g, params, facts);
        if (id == "degree6-census")
            return census_impl(g, params, facts);
        if (id == "degree6-residual-exclusion") {
            if (!options.strict)
                return not_applicable(id, "strict mode is off");
            return residual_exclusion_impl(g, params, facts);
        }
        if (id == "degree6-in-neighborhood") {
            if (!params.max_low_degree_in_neighborhood)
                return not_applicable(id, "profile sets no neighbourhood degree-6 bound");
            if (g.order() == 0 || !facts.diameter_is_two())
                return not_applicable(id, "diameter is not 2");
            ClauseResult r = make_clause(id);
            for (int v : vertices_of_degree(g, params.low_degree)) {
                std::vector<int> inside;
                g.row(v).for_each([&](int u) {
                    if (g.degree(u) == params.low_degree)
                        inside.push_back(u);
                });
                if (static_cast<int>(inside.size()) > *params.max_low_degree_in_neighborhood) {
                    inside.insert(inside.begin(), v);
                    return fail(r, inside,
                                std::to_string(inside.size() - 1) + " degree-6 vertices in N("
                                    + std::to_string(v) + ")");
                }
            }
            return r;
        }
        if (id == "min-degree-diameter2") {
            if (!params.min_degree_when_diameter2)
                return not_applicable(id, "profile sets no diameter-2 degree bound");
            if (g.order() == 0 || !facts.diameter_is_two())
                return not_applicable(id, "diameter is not 2");
            ClauseResult r = make_clause(id);
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) < *params.min_degree_when_diameter2)
                    return fail(r, {v},
                                "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
            return r;
        }
        if (id == "partition-profile") {
            if (!params.partition)
                return not_applicable(id, "profile has no partition rules");
            const std::vector<int> bases = vertices_of_degree(g, params.partition->base_degree);
            if (bases.empty())
                return not_applicable(id, "no vertex of degree " + std::to_string(params.partition->base_degree));
            ClauseResult last;
            for (int v : bases) {
                last = partition_impl(neighborhood_partition(g, v), g, params, facts);
                if (last.verdict != Verdict::pass)
                    return last;
            }
            last.witness = bases;
            last.detail = "checked " + std::to_string(bases.size()) + " base vertices";
            return last;
        }
        if (id == "layer-sizes") {
            if (!params.layers)
                return not_applicable(id, "profile has no layer rules");
            const std::vector<int> bases = vertices_of_degree(g, params.layers->base_degree);
            if (bases.empty())
                return not_applicable(id, "no vertex of degree " + std::to_string(params.layers->base_degree));
            ClauseResult last;
            for (int v : bases) {
                last = layer_impl(g, v, params);
                if (last.verdict != Verdict::pass)
                    return last;
            }
            last.witness = bases;
            return last;
        }
        if (id == "connectivity")
            return connectivity_impl(g, params, facts);
        if (id == "smallest-cut-neighborhood") {
            if (!params.smallest_cut_rule)
                return not_applicable(id, "profile has no smallest-cut rule");
            if (g.order() == 0 || !facts.diameter_is_two())
                return not_applicable(id, "diameter is not 2");
            return cut_impl(g, options.cut_mode, options.cut_budget);
        }
        throw std::logic_error("unknown clause id " + id);
    };

    for (const std::string& id : clause_ids())
        if (!options.disabled.contains(id))
            report.clauses.push_back(evaluate(id));
    return report;
}

} // namespace critgraph
