#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critgraph {

/// Counts of vertices of degree 9, 8, 7 and 6.
struct DegreeTuple {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    int count() const { return a + b + c + d; }
    int degree_sum() const { return 9 * a + 8 * b + 7 * c + 6 * d; }
    std::string to_string() const;

    friend auto operator<=>(const DegreeTuple&, const DegreeTuple&) = default;
    friend DegreeTuple operator+(const DegreeTuple& x, const DegreeTuple& y)
    {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
};

/// Descending a, then descending b.
bool table_order(const DegreeTuple& x, const DegreeTuple& y);

/// A degree tuple for an n-vertex, e-edge graph with degrees in 6..9.
class DegreeSequenceClass {
public:
    /// Throws std::invalid_argument unless a+b+c+d = n, the weighted sum
    /// is 2e and every count is non-negative.
    DegreeSequenceClass(int n, int e, DegreeTuple tuple);

    int order() const { return n_; }
    int edges() const { return e_; }
    const DegreeTuple& tuple() const { return tuple_; }

    friend bool operator==(const DegreeSequenceClass&, const DegreeSequenceClass&) = default;

private:
    int n_;
    int e_;
    DegreeTuple tuple_;
};

/// All non-negative solutions of a+b+c = n-d6 and 9a+8b+7c = 2e-6*d6,
/// by descending a. Throws std::invalid_argument on negative input.
std::vector<DegreeSequenceClass> degseq_solutions(int n, int e, int d6);

struct TableProfile {
    int order = 41;
    int e_lo = 172;
    int e_hi = 184;
    int d6_lo = 0;
    int d6_hi = 6;

    static TableProfile gamma41() { return {}; }
};

/// Keyed by (e, d6); every cell of the profile is present, possibly empty.
using RegeneratedTables = std::map<std::pair<int, int>, std::vector<DegreeSequenceClass>>;

RegeneratedTables regenerate_tables(const TableProfile& profile = TableProfile::gamma41());

/// A printed row; table_id = d6 + 1.
struct PrintedRow {
    int table_id = 1;
    int e = 0;
    DegreeTuple row;

    int d6() const { return table_id - 1; }
    friend auto operator<=>(const PrintedRow&, const PrintedRow&) = default;
};

/// Parses `table_id e a b c d` lines; '#' starts a comment. Throws
/// std::invalid_argument naming the offending line.
std::vector<PrintedRow> parse_transcription(std::string_view text);

/// The transcription shipped with the library.
const std::vector<PrintedRow>& bundled_transcription();

struct TableRowDiagnostic {
    PrintedRow printed;
    bool checksum_order = true;
    bool checksum_edges = true;
    /// The row occurs in the regenerated cell.
    bool table_consistent = true;
    /// The regenerated row of the same cell with the same a.
    std::optional<DegreeTuple> suggested_correction;

    bool flagged() const { return !checksum_order || !checksum_edges; }
};

/// One diagnostic per printed row, in input order.
std::vector<TableRowDiagnostic> audit_printed_rows(const std::vector<PrintedRow>& printed,
                                                   const TableProfile& profile = TableProfile::gamma41());

std::vector<TableRowDiagnostic> flagged_rows(const std::vector<TableRowDiagnostic>& diagnostics);

struct CellDiff {
    int e = 0;
    int d6 = 0;
    std::vector<DegreeTuple> missing;  // regenerated, not printed
    std::vector<DegreeTuple> extra;    // printed, not regenerated
};

/// Cells where the printed set differs from the regenerated one, by d6 then e.
std::vector<CellDiff> diff_tables(const RegeneratedTables& regenerated, const std::vector<PrintedRow>& printed);

struct PartitionTriple {
    int h21 = 0;
    int h22 = 0;
    int h23 = 0;
    int boundary_edges = 0;

    friend auto operator<=>(const PartitionTriple&, const PartitionTriple&) = default;
};

/// h21 in [20,24], h23 in [0, h21-20], h22 = 34-h21-h23; ascending h21, then h23.
std::vector<PartitionTriple> partition_triples();

enum class ContributionScope { closed_neighborhood, residual };

struct ContributionTuple {
    DegreeTuple counts;
    ContributionScope scope = ContributionScope::closed_neighborhood;
    int driver = 0;

    friend bool operator==(const ContributionTuple&, const ContributionTuple&) = default;
};

inline constexpr int kMinBoundaryEdges = 44;
inline constexpr int kMaxBoundaryEdges = 48;
inline constexpr int kMinResidualDegreeSum = 302;
inline constexpr int kMaxResidualDegreeSum = 306;

/// Degree counts of N[v] for a degree-6 v with `boundary_edges` edges
/// leaving N(v): 7 vertices, weighted sum boundary_edges + 12, 1 <= d <= 2.
std::vector<ContributionTuple> nv_contributions(int boundary_edges);

/// Degree counts of the 34 residual vertices with degree sum `degree_sum`;
/// d <= 1, or d = 0 when strict.
std::vector<ContributionTuple> gammav_contributions(int degree_sum, bool strict = false);

/// Residual edge counts admitted around a degree-6 vertex of diameter 2.
inline constexpr int kResidualEdgeCounts[] = {129, 130, 131};

/// Global degree tuples obtained by combining the two contributions with
/// d1 + d2 <= 2.
std::set<DegreeTuple> diam2_deg6_sequences(bool strict = false);
std::map<int, std::set<DegreeTuple>> diam2_deg6_sequences_by_boundary(bool strict = false);

/// Plain-text renderers, edge count column first.
std::string render_tables_text(const RegeneratedTables& tables);
std::string render_partition_text(const std::vector<PartitionTriple>& triples);
std::string render_contributions_text(const std::vector<ContributionTuple>& tuples);
std::string render_audit_text(const std::vector<TableRowDiagnostic>& diagnostics);

} // namespace critgraph
