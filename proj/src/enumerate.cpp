#include "critgraph/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace critgraph {

namespace detail {
extern const std::string_view kPrintedTables;
}

std::string DegreeTuple::to_string() const
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ", " + std::to_string(d)
           + ")";
}

bool table_order(const DegreeTuple& x, const DegreeTuple& y)
{
    if (x.a != y.a)
        return x.a > y.a;
    if (x.b != y.b)
        return x.b > y.b;
    if (x.c != y.c)
        return x.c > y.c;
    return x.d > y.d;
}

DegreeSequenceClass::DegreeSequenceClass(int n, int e, DegreeTuple tuple) : n_(n), e_(e), tuple_(tuple)
{
    if (tuple.a < 0 || tuple.b < 0 || tuple.c < 0 || tuple.d < 0)
        throw std::invalid_argument("degree counts must be non-negative: " + tuple.to_string());
    if (tuple.count() != n)
        throw std::invalid_argument(tuple.to_string() + " does not sum to " + std::to_string(n));
    if (tuple.degree_sum() != 2 * e)
        throw std::invalid_argument(tuple.to_string() + " has degree sum " + std::to_string(tuple.degree_sum())
                                    + ", expected " + std::to_string(2 * e));
}

std::vector<DegreeSequenceClass> degseq_solutions(int n, int e, int d6)
{
    if (n < 0 || e < 0 || d6 < 0)
        throw std::invalid_argument("degseq_solutions needs n, e, d6 >= 0");
    std::vector<DegreeSequenceClass> out;
    const long long m = n - d6;
    const long long weight = 2LL * e - 6LL * d6;
    if (m < 0 || weight < 0)
        return out;
    // Subtracting 7(a+b+c) = 7m leaves 2a + b = weight - 7m.
    const long long slack = weight - 7 * m;
    if (slack < 0)
        return out;
    for (long long a = std::min<long long>(m, slack / 2); a >= 0; --a) {
        const long long b = slack - 2 * a;
        const long long c = m - a - b;
        if (c < 0)
            break;
        out.emplace_back(n, e, DegreeTuple{int(a), int(b), int(c), d6});
    }
    return out;
}

RegeneratedTables regenerate_tables(const TableProfile& profile)
{
    RegeneratedTables tables;
    for (int d6 = profile.d6_lo; d6 <= profile.d6_hi; ++d6)
        for (int e = profile.e_lo; e <= profile.e_hi; ++e)
            tables[{e, d6}] = degseq_solutions(profile.order, e, d6);
    return tables;
}

std::vector<PrintedRow> parse_transcription(std::string_view text)
{
    std::vector<PrintedRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<int> values;
        std::string token;
        while (fields >> token) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw std::invalid_argument("line " + std::to_string(line_number) + ": bad integer '" + token + "'");
            values.push_back(v);
        }
        if (values.empty())
            continue;
        if (values.size() != 6)
            throw std::invalid_argument("line " + std::to_string(line_number) + ": expected 6 fields, got "
                                        + std::to_string(values.size()));
        if (values[0] < 1)
            throw std::invalid_argument("line " + std::to_string(line_number) + ": table id must be positive");
        rows.push_back({values[0], values[1], {values[2], values[3], values[4], values[5]}});
    }
    return rows;
}

const std::vector<PrintedRow>& bundled_transcription()
{
    static const std::vector<PrintedRow> rows = parse_transcription(detail::kPrintedTables);
    return rows;
}

std::vector<TableRowDiagnostic> audit_printed_rows(const std::vector<PrintedRow>& printed, const TableProfile& profile)
{
    std::vector<TableRowDiagnostic> out;
    out.reserve(printed.size());
    for (const PrintedRow& row : printed) {
        TableRowDiagnostic diag;
        diag.printed = row;
        diag.checksum_order = row.row.count() == profile.order;
        diag.checksum_edges = row.row.degree_sum() == 2 * row.e;
        const std::vector<DegreeSequenceClass> cell =
            row.e >= 0 && row.d6() >= 0 ? degseq_solutions(profile.order, row.e, row.d6())
                                        : std::vector<DegreeSequenceClass>{};
        diag.table_consistent =
            std::any_of(cell.begin(), cell.end(), [&](const DegreeSequenceClass& s) { return s.tuple() == row.row; });
        if (diag.flagged())
            for (const auto& s : cell)
                if (s.tuple().a == row.row.a)
                    diag.suggested_correction = s.tuple();
        out.push_back(diag);
    }
    return out;
}

std::vector<TableRowDiagnostic> flagged_rows(const std::vector<TableRowDiagnostic>& diagnostics)
{
    std::vector<TableRowDiagnostic> out;
    std::copy_if(diagnostics.begin(), diagnostics.end(), std::back_inserter(out),
                 [](const TableRowDiagnostic& d) { return d.flagged(); });
    return out;
}

std::vector<CellDiff> diff_tables(const RegeneratedTables& regenerated, const std::vector<PrintedRow>& printed)
{
    std::map<std::pair<int, int>, std::set<DegreeTuple>> printed_cells;
    for (const PrintedRow& row : printed)
        printed_cells[{row.e, row.d6()}].insert(row.row);

    std::vector<CellDiff> out;
    for (const auto& [key, solutions] : regenerated) {
        std::set<DegreeTuple> want;
        for (const auto& s : solutions)
            want.insert(s.tuple());
        const std::set<DegreeTuple>& have = printed_cells[key];
        CellDiff diff{key.first, key.second, {}, {}};
        std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(diff.missing));
        std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(diff.extra));
        if (!diff.missing.empty() || !diff.extra.empty()) {
            std::sort(diff.missing.begin(), diff.missing.end(), table_order);
            std::sort(diff.extra.begin(), diff.extra.end(), table_order);
            out.push_back(std::move(diff));
        }
    }
    // Printed cells outside the regenerated range.
    for (const auto& [key, rows] : printed_cells)
        if (!regenerated.contains(key) && !rows.empty()) {
            CellDiff diff{key.first, key.second, {}, {rows.begin(), rows.end()}};
            std::sort(diff.extra.begin(), diff.extra.end(), table_order);
            out.push_back(std::move(diff));
        }
    std::sort(out.begin(), out.end(),
              [](const CellDiff& x, const CellDiff& y) { return std::pair(x.d6, x.e) < std::pair(y.d6, y.e); });
    return out;
}

std::vector<PartitionTriple> partition_triples()
{
    std::vector<PartitionTriple> out;
    for (int h21 = 20; h21 <= 24; ++h21)
        for (int h23 = 0; h23 <= h21 - 20; ++h23) {
            const int h22 = 34 - h21 - h23;
            out.push_back({h21, h22, h23, h21 + 2 * h22 + 3 * h23});
        }
    return out;
}

namespace {

/// Four-part compositions of `count` with weighted sum `weight` and d in [d_lo, d_hi].
std::vector<DegreeTuple> compositions(int count, int weight, int d_lo, int d_hi)
{
    std::vector<DegreeTuple> out;
    for (int d = d_lo; d <= d_hi && d <= count; ++d) {
        const int m = count - d;
        const int slack = weight - 6 * d - 7 * m;
        if (slack < 0)
            continue;
        for (int a = std::min(m, slack / 2); a >= 0; --a) {
            const int b = slack - 2 * a;
            const int c = m - a - b;
            if (c < 0)
                break;
            out.push_back({a, b, c, d});
        }
    }
    std::sort(out.begin(), out.end(), table_order);
    return out;
}

std::vector<ContributionTuple> tag(const std::vector<DegreeTuple>& tuples, ContributionScope scope, int driver)
{
    std::vector<ContributionTuple> out;
    for (const auto& t : tuples)
        out.push_back({t, scope, driver});
    return out;
}

} // namespace

std::vector<ContributionTuple> nv_contributions(int boundary_edges)
{
    if (boundary_edges < kMinBoundaryEdges || boundary_edges > kMaxBoundaryEdges)
        throw std::out_of_range("boundary edge count must lie in [44, 48], got " + std::to_string(boundary_edges));
    return tag(compositions(7, boundary_edges + 12, 1, 2), ContributionScope::closed_neighborhood, boundary_edges);
}

std::vector<ContributionTuple> gammav_contributions(int degree_sum, bool strict)
{
    if (degree_sum < kMinResidualDegreeSum || degree_sum > kMaxResidualDegreeSum)
        throw std::out_of_range("residual degree sum must lie in [302, 306], got " + std::to_string(degree_sum));
    return tag(compositions(34, degree_sum, 0, strict ? 0 : 1), ContributionScope::residual, degree_sum);
}

std::map<int, std::set<DegreeTuple>> diam2_deg6_sequences_by_boundary(bool strict)
{
    std::map<int, std::set<DegreeTuple>> out;
    for (int boundary = kMinBoundaryEdges; boundary <= kMaxBoundaryEdges; ++boundary) {
        std::set<DegreeTuple>& bucket = out[boundary];
        const std::vector<ContributionTuple> inner = nv_contributions(boundary);
        for (int r : kResidualEdgeCounts) {
            const int sum = 2 * r + boundary;
            if (sum < kMinResidualDegreeSum || sum > kMaxResidualDegreeSum)
                continue;
            for (const auto& x : inner)
                for (const auto& y : gammav_contributions(sum, strict))
                    if (x.counts.d + y.counts.d <= 2)
                        bucket.insert(x.counts + y.counts);
        }
    }
    return out;
}

std::set<DegreeTuple> diam2_deg6_sequences(bool strict)
{
    std::set<DegreeTuple> out;
    for (const auto& [boundary, tuples] : diam2_deg6_sequences_by_boundary(strict))
        out.insert(tuples.begin(), tuples.end());
    return out;
}

std::string render_tables_text(const RegeneratedTables& tables)
{
    std::set<int> d6_values;
    for (const auto& [key, solutions] : tables)
        d6_values.insert(key.second);

    std::ostringstream out;
    for (int d6 : d6_values) {
        if (d6 != *d6_values.begin())
            out << '\n';
        out << "Table " << d6 + 1 << " (" << d6 << " vertices of degree 6)\n";
        out << "  e    (a, b, c, d)\n";
        for (const auto& [key, solutions] : tables) {
            if (key.second != d6)
                continue;
            out << "  " << std::setw(3) << key.first << "  ";
            if (solutions.empty())
                out << "(none)";
            for (std::size_t i = 0; i < solutions.size(); ++i)
                out << (i ? " " : "") << solutions[i].tuple().to_string();
            out << '\n';
        }
    }
    return out.str();
}

std::string render_partition_text(const std::vector<PartitionTriple>& triples)
{
    std::ostringstream out;
    out << "|H21| |H22| |H23| edges\n";
    for (const auto& t : triples)
        out << std::setw(5) << t.h21 << ' ' << std::setw(5) << t.h22 << ' ' << std::setw(5) << t.h23 << ' '
            << std::setw(5) << t.boundary_edges << '\n';
    return out.str();
}

std::string render_contributions_text(const std::vector<ContributionTuple>& tuples)
{
    std::ostringstream out;
    int driver = -1;
    for (const auto& t : tuples) {
        if (t.driver != driver) {
            if (driver >= 0)
                out << '\n';
            out << std::setw(3) << t.driver << " ";
            driver = t.driver;
        } else {
            out << ' ';
        }
        out << t.counts.to_string();
    }
    if (driver >= 0)
        out << '\n';
    return out.str();
}

std::string render_audit_text(const std::vector<TableRowDiagnostic>& diagnostics)
{
    std::ostringstream out;
    for (const auto& d : diagnostics) {
        out << "table " << d.printed.table_id << " e=" << d.printed.e << ' ' << d.printed.row.to_string()
            << " order:" << (d.checksum_order ? "ok" : "FAIL") << " edges:" << (d.checksum_edges ? "ok" : "FAIL");
        if (d.suggested_correction)
            out << " correction " << d.suggested_correction->to_string();
        out << '\n';
    }
    return out.str();
}

} // namespace critgraph
