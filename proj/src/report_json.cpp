#include "critgraph/report_json.hpp"

namespace critgraph {

Json to_json(const ClauseResult& clause)
{
    Json j;
    j["clause_id"] = clause.id;
    j["citation"] = clause.citation;
    j["verdict"] = std::string(to_string(clause.verdict));
    j["witness"] = clause.witness;
    j["detail"] = clause.detail;
    return j;
}

Json to_json(const CriticalityReport& report)
{
    const TargetParams& t = report.target;
    Json j;
    j["schema"] = kReportSchema;
    j["target"] = {{"profile", t.name},
                   {"clique_bound", t.clique_bound},
                   {"independence_bound", t.independence_bound},
                   {"order", t.order},
                   {"extrapolated", t.extrapolated}};
    j["overall"] = report.overall_pass() ? "not-excluded" : "excluded";
    Json clauses = Json::array();
    for (const auto& c : report.clauses)
        clauses.push_back(to_json(c));
    j["clauses"] = std::move(clauses);
    return j;
}

Json to_json(const InvariantSummary& s)
{
    Json j;
    j["order"] = s.order;
    j["edges"] = s.edge_count;
    j["min_degree"] = s.min_degree;
    j["max_degree"] = s.max_degree;
    j["regular"] = s.is_regular;
    j["independence_number"] = s.independence_number;
    j["vertex_connectivity"] = s.vertex_connectivity;
    j["edge_connectivity"] = s.edge_connectivity;
    j["diameter"] = s.diameter.is_finite() ? Json(s.diameter.value()) : Json("infinite");
    return j;
}

Json to_json(const DegreeTuple& t) { return Json::array({t.a, t.b, t.c, t.d}); }

Json tables_json(const RegeneratedTables& tables)
{
    Json cells = Json::array();
    for (const auto& [key, solutions] : tables) {
        Json rows = Json::array();
        for (const auto& s : solutions)
            rows.push_back(to_json(s.tuple()));
        cells.push_back({{"table", key.second + 1}, {"e", key.first}, {"d6", key.second}, {"rows", std::move(rows)}});
    }
    return cells;
}

Json partition_json(const std::vector<PartitionTriple>& triples)
{
    Json rows = Json::array();
    for (const auto& t : triples)
        rows.push_back({{"h21", t.h21}, {"h22", t.h22}, {"h23", t.h23}, {"boundary_edges", t.boundary_edges}});
    return rows;
}

Json contributions_json(const std::vector<ContributionTuple>& tuples)
{
    Json rows = Json::array();
    for (const auto& t : tuples)
        rows.push_back({{"scope", t.scope == ContributionScope::closed_neighborhood ? "closed-neighborhood" : "residual"},
                        {"driver", t.driver},
                        {"counts", to_json(t.counts)}});
    return rows;
}

Json audit_json(const std::vector<TableRowDiagnostic>& diagnostics)
{
    Json rows = Json::array();
    for (const auto& d : diagnostics) {
        Json j;
        j["table"] = d.printed.table_id;
        j["e"] = d.printed.e;
        j["printed"] = to_json(d.printed.row);
        j["checksum_order"] = d.checksum_order;
        j["checksum_edges"] = d.checksum_edges;
        j["table_consistent"] = d.table_consistent;
        j["suggested_correction"] = d.suggested_correction ? to_json(*d.suggested_correction) : Json(nullptr);
        rows.push_back(std::move(j));
    }
    return rows;
}

} // namespace critgraph
