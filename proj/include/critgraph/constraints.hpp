#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Not-applicable is a verdict in its own right: a clause whose
/// preconditions do not hold is never reported as a pass.
enum class Verdict { pass, fail, not_applicable, budget_exceeded };

std::string_view to_string(Verdict v);

struct ClauseResult {
    std::string id;
    std::string citation;
    Verdict verdict = Verdict::pass;
    std::vector<int> witness;
    std::string detail;

    bool passed() const { return verdict == Verdict::pass; }
    bool failed() const { return verdict == Verdict::fail; }
};

struct IntWindow {
    int lo = 0;
    int hi = 0;
    bool contains(int x) const { return lo <= x && x <= hi; }
    friend bool operator==(const IntWindow&, const IntWindow&) = default;
};

/// Conditions on the common-neighbour partition around a degree-6 vertex
/// of a diameter-2 graph.
struct PartitionRules {
    int base_degree = 6;
    IntWindow single_common{20, 24};
    int max_common = 3;
    int residual_degree = 8;
    IntWindow residual_degree_count{20, 24};
    IntWindow boundary_edges{44, 48};
};

/// Distance-layer windows around a degree-4 vertex.
struct LayerRules {
    int base_degree = 4;
    IntWindow layer2{19, 24};
    IntWindow layer3{11, 17};
};

/// Target parameters plus every threshold the clauses use. Clauses whose
/// threshold is unset report not-applicable.
struct TargetParams {
    std::string name;
    int clique_bound = 3;
    int independence_bound = 10;
    int order = 41;
    bool extrapolated = false;

    std::optional<int> neighbor_degree_sum_threshold;
    /// [min degree, max degree]; the max degree must be attained.
    std::optional<IntWindow> degree_window;
    std::optional<IntWindow> edge_window;
    /// Lower bound on the number of vertices with the top degree.
    std::optional<int> min_top_degree_count;
    std::optional<int> union_neighborhood_bound;
    std::optional<IntWindow> diameter_window;

    int low_degree = 6;
    std::optional<int> max_low_degree_count;
    /// Diameter 2 forces at most two low-degree vertices, adjacent if two.
    bool low_degree_diameter2_rule = false;
    std::optional<int> max_low_degree_in_neighborhood;
    std::optional<int> min_degree_when_diameter2;

    std::optional<PartitionRules> partition;
    std::optional<LayerRules> layers;

    std::optional<int> min_connectivity;
    bool connectivity_needs_diameter2 = false;
    bool smallest_cut_rule = false;

    /// (3,10,41) candidates.
    static TargetParams gamma41();
    /// (3,10,40) candidates.
    static TargetParams omega40();
    /// Only the Ramsey and order clauses apply; flagged extrapolated.
    static TargetParams custom(int clique_bound, int independence_bound, int order);
    /// "gamma41", "omega40" or "custom:s,t,n". Throws std::invalid_argument.
    static TargetParams parse(std::string_view spec);
};

/// Fails when some vertex has two neighbours whose degrees sum to at most
/// `threshold`. Witness: (v, v1, v2).
ClauseResult degree_sum_pair_ok(const Graph& g, int threshold);

/// Fails when some vertex has two neighbours v1, v2 with
/// |N(v1) u N(v2)| < bound. Witness: (v, v1, v2).
ClauseResult union_neighborhood_ok(const Graph& g, int bound);

ClauseResult degree6_census_ok(const Graph& g, const TargetParams& params);

/// Strict variant: in a diameter-2 graph no low-degree vertex lies outside
/// the closed neighbourhood of another.
ClauseResult residual_degree6_exclusion_ok(const Graph& g, const TargetParams& params);

/// counts[i] = number of vertices outside N[v] with exactly i neighbours
/// in N(v), for i = 0..max degree.
struct PartitionProfile {
    int base_vertex = 0;
    std::vector<int> counts;
    int boundary_edges = 0;

    int count(int i) const { return i >= 0 && i < static_cast<int>(counts.size()) ? counts[i] : 0; }
    int residual_size() const;

    /// Builds a profile from raw counts; boundary_edges = sum of i*counts[i].
    static PartitionProfile from_counts(int base_vertex, std::vector<int> counts);
};

PartitionProfile neighborhood_partition(const Graph& g, int v);

/// Applies only when the base vertex has the rule's degree, g has
/// diameter 2 and the profile's order matches.
ClauseResult partition_constraints_ok(const PartitionProfile& profile, const Graph& g, const TargetParams& params);

ClauseResult layer_size_ok(const Graph& g, int v, const TargetParams& params);

/// kappa >= min_connectivity and kappa = delta. Witness: a minimum cut.
ClauseResult connectivity_clauses_ok(const Graph& g, const TargetParams& params);

enum class CutMode { witness, exhaustive };

inline constexpr long long kDefaultCutBudget = 10'000'000;

/// Witness mode: some N(v) is a minimum vertex cut. Exhaustive mode: every
/// minimum vertex cut is some N(v); needs C(n, kappa) <= budget, otherwise
/// the verdict is budget_exceeded.
ClauseResult smallest_cut_is_neighborhood(const Graph& g, CutMode mode, long long budget = kDefaultCutBudget);

struct ReportOptions {
    bool strict = false;
    CutMode cut_mode = CutMode::witness;
    long long cut_budget = kDefaultCutBudget;
    std::set<std::string> disabled;
};

struct CriticalityReport {
    TargetParams target;
    std::vector<ClauseResult> clauses;

    bool overall_pass() const;
    const ClauseResult* find(std::string_view id) const;
};

/// Clause ids in ledger order.
const std::vector<std::string>& clause_ids();

/// Evaluates every clause in fixed order. A pass means "not excluded by
/// these necessary conditions", never that the graph is critical.
CriticalityReport full_report(const Graph& g, const TargetParams& params, const ReportOptions& options = {});

} // namespace critgraph
