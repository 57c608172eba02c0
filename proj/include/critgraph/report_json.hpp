#pragma once

#include <json.hpp>

#include "critgraph/constraints.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/invariants.hpp"

namespace critgraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "critgraph.report/1";

Json to_json(const ClauseResult& clause);
/// Schema-tagged; key order is fixed so equal reports serialise to equal bytes.
Json to_json(const CriticalityReport& report);
Json to_json(const InvariantSummary& summary);
Json to_json(const DegreeTuple& tuple);

Json tables_json(const RegeneratedTables& tables);
Json partition_json(const std::vector<PartitionTriple>& triples);
Json contributions_json(const std::vector<ContributionTuple>& tuples);
Json audit_json(const std::vector<TableRowDiagnostic>& diagnostics);

} // namespace critgraph
