#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "critgraph/constraints.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/invariants.hpp"

namespace critgraph::cli {

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

std::filesystem::path resolve_catalog_dir(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty())
        return *flag;
    if (const char* env = std::getenv(kCatalogEnv); env && *env)
        return env;
    return "catalog";
}

namespace {

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputGraphs {
    std::vector<Graph6Line> lines;
};

InputGraphs read_input(const std::string& path, std::istream& in)
{
    if (path == "-")
        return {read_graph6_lines(in)};
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot read '" + path + "'");
    return {read_graph6_lines(file)};
}

std::pair<int, int> parse_range(const std::string& text, const char* name)
{
    const std::size_t dash = text.find('-', 1);
    try {
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, dash), &used);
        if (used != (dash == std::string::npos ? text.size() : dash))
            throw std::invalid_argument(text);
        if (dash == std::string::npos)
            return {lo, lo};
        const std::string rest = text.substr(dash + 1);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size() || hi < lo)
            throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(std::string("bad ") + name + " range '" + text + "' (use N or LO-HI)");
    }
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("bad integer list '" + text + "'");
        }
    }
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

void append_results_log(const std::string& path, const Json& record)
{
    std::ofstream log(path, std::ios::app);
    if (!log)
        throw UsageError("cannot append to results log '" + path + "'");
    log << record.dump() << '\n';
}

void print_report_table(std::ostream& out, const CriticalityReport& r)
{
    for (const ClauseResult& c : r.clauses) {
        out << "  " << std::left << std::setw(28) << c.id << std::setw(16) << to_string(c.verdict) << std::right
            << c.detail;
        if (!c.witness.empty())
            out << (c.detail.empty() ? "" : "  ") << "witness: " << join_ints(c.witness);
        out << '\n';
    }
    out << "  overall: " << (r.overall_pass() ? "not excluded" : "excluded") << '\n';
}

struct Options {
    std::string format = "table";
    std::string profile = "gamma41";
    bool strict = false;
    std::string cut_mode = "witness";
    long long budget = kDefaultCutBudget;
    std::vector<std::string> disabled;
    bool summary = false;
    std::optional<std::string> results_log;
    std::optional<std::string> catalog_dir;
    std::string path;

    int n = 41;
    int e = 172;
    int d6 = 0;
    bool diam2_deg6 = false;
    std::optional<std::string> e_range;
    std::optional<std::string> d6_range;
    bool audit = false;
    bool contributions = false;
    std::optional<int> vertex;
    std::optional<std::string> transcription;
    std::string gen_kind;
    std::vector<std::string> gen_args;
    std::uint64_t seed = 1;
};

void add_format(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    const TargetParams params = TargetParams::parse(o.profile);
    ReportOptions ropts;
    ropts.strict = o.strict;
    ropts.cut_mode = o.cut_mode == "exhaustive" ? CutMode::exhaustive : CutMode::witness;
    ropts.cut_budget = o.budget;
    for (const auto& id : o.disabled) {
        const auto& ids = clause_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw UsageError("unknown clause id '" + id + "'");
        ropts.disabled.insert(id);
    }
    const bool json = o.format == "json";
    if (params.extrapolated)
        (json ? err : out) << "note: profile " << params.name
                           << " is extrapolated; only the Ramsey and order clauses apply\n";

    const InputGraphs input = read_input(o.path, in);
    if (input.lines.empty())
        throw UsageError("no graph6 lines in '" + o.path + "'");
    bool input_error = false;
    bool any_fail = false;
    for (const Graph6Line& line : input.lines) {
        const std::string digest = "sha256:" + sha256_hex(line.text);
        if (!line.graph) {
            input_error = true;
            if (json)
                out << envelope({{"line", line.line_number}, {"error", line.error}}, line.text).dump() << '\n';
            else
                out << "line " << line.line_number << ": error: " << line.error << '\n';
            continue;
        }
        const Graph& g = *line.graph;
        const CriticalityReport r = full_report(g, params, ropts);
        any_fail |= !r.overall_pass();
        Json payload;
        payload["line"] = line.line_number;
        payload["report"] = to_json(r);
        if (o.summary && g.order() >= 2)
            payload["summary"] = to_json(summarize(g));
        if (json) {
            out << envelope(payload, line.text).dump() << '\n';
        } else {
            out << "line " << line.line_number << ": " << g.order() << " vertices, " << g.edge_count()
                << " edges, profile " << params.name << ", " << digest << '\n';
            if (payload.contains("summary"))
                out << "  summary: " << payload["summary"].dump() << '\n';
            print_report_table(out, r);
        }
        if (o.results_log) {
            Json record;
            record["input_digest"] = digest;
            record["timestamp"] = utc_timestamp();
            record["profile"] = params.name;
            record["overall"] = r.overall_pass() ? "not-excluded" : "excluded";
            Json verdicts = Json::object();
            for (const auto& c : r.clauses)
                verdicts[c.id] = std::string(to_string(c.verdict));
            record["verdicts"] = std::move(verdicts);
            append_results_log(*o.results_log, record);
        }
    }
    if (input_error)
        return kUsageError;
    return any_fail ? kClauseFailed : kAllPass;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out)
{
    std::string path = o.path;
    if (path.empty()) {
        const std::filesystem::path file = resolve_catalog_dir(o.catalog_dir) / kR39CatalogFile;
        if (!std::filesystem::exists(file)) {
            out << "skipped: no catalog file at " << file.string() << '\n';
            return kAllPass;
        }
        path = file.string();
    }
    const InputGraphs input = read_input(path, in);
    bool bad_input = false;
    bool any_fail = false;
    for (const Graph6Line& line : input.lines) {
        Json payload{{"line", line.line_number}};
        if (!line.graph) {
            bad_input = true;
            payload["error"] = line.error;
        } else {
            const Diagnostics d = verify_r39_critical(*line.graph);
            any_fail |= !d.ok;
            payload["ok"] = d.ok;
            payload["failures"] = d.failures;
        }
        if (o.format == "json") {
            out << envelope(payload, line.text).dump() << '\n';
        } else if (payload.contains("error")) {
            out << "line " << line.line_number << ": error: " << line.error << '\n';
        } else {
            out << "line " << line.line_number << ": " << (payload["ok"].get<bool>() ? "verified" : "not verified");
            for (const auto& f : payload["failures"])
                out << "; " << f.get<std::string>();
            out << '\n';
        }
    }
    if (bad_input)
        return kUsageError;
    return any_fail ? kClauseFailed : kAllPass;
}

int cmd_degseq(const Options& o, std::ostream& out)
{
    Json rows = Json::array();
    std::vector<DegreeTuple> tuples;
    if (o.diam2_deg6) {
        for (const auto& t : diam2_deg6_sequences(o.strict))
            tuples.push_back(t);
        std::sort(tuples.begin(), tuples.end(), table_order);
    } else {
        if (o.n < 0 || o.e < 0 || o.d6 < 0)
            throw UsageError("n, e and d6 must be non-negative");
        for (const auto& s : degseq_solutions(o.n, o.e, o.d6))
            tuples.push_back(s.tuple());
    }
    if (o.format == "json") {
        for (const auto& t : tuples)
            rows.push_back(to_json(t));
        Json payload{{"kind", o.diam2_deg6 ? "diam2-deg6-sequences" : "degree-sequences"}, {"rows", rows}};
        if (!o.diam2_deg6)
            payload["query"] = {{"n", o.n}, {"e", o.e}, {"d6", o.d6}};
        out << envelope(payload, std::nullopt).dump() << '\n';
        return kAllPass;
    }
    if (tuples.empty())
        out << "(none)\n";
    for (const auto& t : tuples)
        out << t.to_string() << '\n';
    return kAllPass;
}

int cmd_tables(const Options& o, std::ostream& out)
{
    const TableProfile full = TableProfile::gamma41();
    TableProfile p = full;
    if (o.e_range)
        std::tie(p.e_lo, p.e_hi) = parse_range(*o.e_range, "--e");
    if (o.d6_range)
        std::tie(p.d6_lo, p.d6_hi) = parse_range(*o.d6_range, "--d6");
    if (p.e_lo < full.e_lo || p.e_hi > full.e_hi || p.d6_lo < full.d6_lo || p.d6_hi > full.d6_hi)
        throw UsageError("ranges must lie within e 172-184 and d6 0-6");
    const RegeneratedTables tables = regenerate_tables(p);

    std::vector<TableRowDiagnostic> flagged;
    std::vector<CellDiff> diffs;
    if (o.audit) {
        flagged = flagged_rows(audit_printed_rows(bundled_transcription()));
        diffs = diff_tables(regenerate_tables(), bundled_transcription());
    }
    if (o.format == "json") {
        Json payload{{"kind", "degree-sequence-tables"}, {"cells", tables_json(tables)}};
        if (o.audit)
            payload["audit"] = audit_json(flagged);
        out << envelope(payload, std::nullopt).dump() << '\n';
        return kAllPass;
    }
    out << render_tables_text(tables);
    bool all_empty = true;
    for (const auto& [key, cell] : tables)
        all_empty &= cell.empty();
    if (all_empty)
        out << "note: no feasible degree sequences in the requested range\n";
    if (o.audit) {
        out << "\nAudit of the printed tables: " << flagged.size() << " flagged rows\n" << render_audit_text(flagged);
        for (const auto& d : diffs) {
            out << "cell table " << d.d6 + 1 << " e=" << d.e << ":";
            for (const auto& t : d.extra)
                out << " printed-only " << t.to_string();
            for (const auto& t : d.missing)
                out << " missing " << t.to_string();
            out << '\n';
        }
    }
    return kAllPass;
}

int cmd_partition(const Options& o, std::ostream& out)
{
    const auto triples = partition_triples();
    std::vector<ContributionTuple> closed;
    std::vector<ContributionTuple> residual;
    if (o.contributions) {
        for (int e = kMinBoundaryEdges; e <= kMaxBoundaryEdges; ++e)
            for (auto& t : nv_contributions(e))
                closed.push_back(t);
        for (int s = kMinResidualDegreeSum; s <= kMaxResidualDegreeSum; ++s)
            for (auto& t : gammav_contributions(s, o.strict))
                residual.push_back(t);
    }
    if (o.format == "json") {
        Json payload{{"kind", "partition-triples"}, {"rows", partition_json(triples)}};
        if (o.contributions) {
            payload["closed_neighborhood"] = contributions_json(closed);
            payload["residual"] = contributions_json(residual);
        }
        out << envelope(payload, std::nullopt).dump() << '\n';
        return kAllPass;
    }
    out << render_partition_text(triples);
    if (o.contributions) {
        out << "\nN[v] contributions by boundary edge count\n" << render_contributions_text(closed);
        out << "\nResidual contributions by degree sum\n" << render_contributions_text(residual);
    }
    return kAllPass;
}

int cmd_layers(const Options& o, std::istream& in, std::ostream& out)
{
    const InputGraphs input = read_input(o.path, in);
    bool bad_input = false;
    for (const Graph6Line& line : input.lines) {
        if (!line.graph) {
            bad_input = true;
            out << "line " << line.line_number << ": error: " << line.error << '\n';
            continue;
        }
        const Graph& g = *line.graph;
        std::vector<int> vertices;
        if (o.vertex) {
            if (*o.vertex < 0 || *o.vertex >= g.order())
                throw UsageError("vertex " + std::to_string(*o.vertex) + " out of range");
            vertices.push_back(*o.vertex);
        } else {
            for (int v = 0; v < g.order(); ++v)
                vertices.push_back(v);
        }
        Json rows = Json::array();
        for (int v : vertices) {
            const LayerProfile lp = distance_layers(g, v);
            const PartitionProfile pp = neighborhood_partition(g, v);
            rows.push_back({{"vertex", v},
                            {"degree", g.degree(v)},
                            {"layer_sizes", lp.layer_sizes},
                            {"unreachable", lp.unreachable_count},
                            {"partition_counts", pp.counts},
                            {"boundary_edges", pp.boundary_edges}});
        }
        if (o.format == "json") {
            out << envelope({{"line", line.line_number}, {"layers", rows}}, line.text).dump() << '\n';
            continue;
        }
        out << "line " << line.line_number << ": " << g.order() << " vertices\n";
        out << "  vertex degree layers | unreachable | H counts (common neighbours 0..) | boundary\n";
        for (const auto& r : rows)
            out << "  " << std::setw(6) << r["vertex"].get<int>() << ' ' << std::setw(6) << r["degree"].get<int>()
                << ' ' << join_ints(r["layer_sizes"].get<std::vector<int>>()) << " | " << r["unreachable"].get<int>()
                << " | " << join_ints(r["partition_counts"].get<std::vector<int>>()) << " | "
                << r["boundary_edges"].get<int>() << '\n';
    }
    return bad_input ? kUsageError : kAllPass;
}

int cmd_audit(const Options& o, std::ostream& out)
{
    std::vector<PrintedRow> rows = bundled_transcription();
    if (o.transcription) {
        std::ifstream file(*o.transcription);
        if (!file)
            throw UsageError("cannot read '" + *o.transcription + "'");
        std::stringstream text;
        text << file.rdbuf();
        try {
            rows = parse_transcription(text.str());
        } catch (const std::invalid_argument& e) {
            throw UsageError(*o.transcription + ": " + e.what());
        }
    }
    const auto flagged = flagged_rows(audit_printed_rows(rows));
    if (o.format == "json") {
        out << envelope({{"kind", "audit"}, {"rows_checked", rows.size()}, {"flagged", audit_json(flagged)}},
                        std::nullopt)
                   .dump()
            << '\n';
        return kAllPass;
    }
    out << rows.size() << " rows checked, " << flagged.size() << " flagged\n" << render_audit_text(flagged);
    return kAllPass;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    const auto& a = o.gen_args;
    auto need = [&](std::size_t count) {
        if (a.size() != count)
            throw UsageError("gen " + o.gen_kind + " takes " + std::to_string(count) + " argument(s)");
    };
    auto int_arg = [&](std::size_t i) {
        const auto v = parse_int_list(a[i]);
        if (v.size() != 1)
            throw UsageError("expected one integer, got '" + a[i] + "'");
        return v[0];
    };
    Graph g;
    try {
        if (o.gen_kind == "cycle") {
            need(1);
            g = gen::cycle(int_arg(0));
        } else if (o.gen_kind == "path") {
            need(1);
            g = gen::path(int_arg(0));
        } else if (o.gen_kind == "complete") {
            need(1);
            g = gen::complete(int_arg(0));
        } else if (o.gen_kind == "circulant") {
            need(2);
            g = gen::circulant(int_arg(0), parse_int_list(a[1]));
        } else if (o.gen_kind == "petersen") {
            need(0);
            g = gen::petersen();
        } else if (o.gen_kind == "random-tf") {
            need(1);
            g = gen::random_triangle_free(int_arg(0), o.seed);
        } else {
            throw UsageError("unknown generator '" + o.gen_kind
                             + "' (cycle, path, complete, circulant, petersen, random-tf)");
        }
    } catch (const GraphError& e) {
        throw UsageError(e.what());
    }
    out << to_graph6(g) << '\n';
    return kAllPass;
}

} // namespace

Json envelope(const Json& payload, const std::optional<std::string>& graph6_line)
{
    Json j;
    j["tool"] = "critgraph";
    j["version"] = kVersion;
    j["input_digest"] = graph6_line ? Json("sha256:" + sha256_hex(*graph6_line)) : Json(nullptr);
    j["timestamp"] = utc_timestamp();
    j["payload"] = payload;
    return j;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Structural checks and enumerations for Ramsey-critical graph candidates", "critgraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* analyze = app.add_subcommand("analyze", "Evaluate every clause on each graph6 line");
    analyze->add_option("path", o.path, "graph6 file, or - for stdin")->required();
    analyze->add_option("--profile", o.profile, "gamma41, omega40 or custom:s,t,n");
    analyze->add_flag("--strict", o.strict, "Enable the strict degree-6 exclusion clause");
    analyze->add_option("--cut-mode", o.cut_mode, "Smallest-cut check mode")
        ->check(CLI::IsMember({"witness", "exhaustive"}));
    analyze->add_option("--budget", o.budget, "Subset budget for exhaustive cut search")->check(CLI::PositiveNumber);
    analyze->add_option("--disable", o.disabled, "Skip a clause by id (repeatable)");
    analyze->add_flag("--summary", o.summary, "Include the invariant summary");
    analyze->add_option("--results-log", o.results_log, "Append a JSONL record per graph");
    add_format(analyze, o);

    auto* verify = app.add_subcommand("verify", "Check a (3,9,35) graph: 8-regular, triangle-free, alpha 8");
    verify->add_option("path", o.path, "graph6 file or -; defaults to the catalog entry");
    verify->add_option("--catalog-dir", o.catalog_dir, std::string("Catalog directory (else $") + kCatalogEnv
                                                           + ", else ./catalog)");
    add_format(verify, o);

    auto* degseq = app.add_subcommand("degseq", "Solve for degree-sequence classes (a, b, c, d)");
    degseq->add_option("--n", o.n, "Order");
    degseq->add_option("--e", o.e, "Edge count");
    degseq->add_option("--d6", o.d6, "Number of degree-6 vertices");
    degseq->add_flag("--diam2-deg6", o.diam2_deg6, "List the combined sequences for diameter 2 with a degree-6 vertex");
    degseq->add_flag("--strict", o.strict, "Exclude degree-6 vertices from the residual contribution");
    add_format(degseq, o);

    auto* tables = app.add_subcommand("tables", "Regenerate the degree-sequence tables");
    tables->add_option("--e", o.e_range, "Edge count or range LO-HI within 172-184");
    tables->add_option("--d6", o.d6_range, "Degree-6 count or range LO-HI within 0-6");
    tables->add_flag("--audit", o.audit, "Audit the bundled transcription of the printed tables");
    add_format(tables, o);

    auto* partition = app.add_subcommand("partition", "List the admissible (|H21|, |H22|, |H23|) triples");
    partition->add_flag("--contributions", o.contributions, "Also list the contribution tuples");
    partition->add_flag("--strict", o.strict, "Exclude degree-6 vertices from the residual contribution");
    add_format(partition, o);

    auto* layers = app.add_subcommand("layers", "Distance layers and common-neighbour counts per vertex");
    layers->add_option("path", o.path, "graph6 file, or - for stdin")->required();
    layers->add_option("--vertex", o.vertex, "Only this vertex");
    add_format(layers, o);

    auto* audit = app.add_subcommand("audit", "Checksum every printed table row");
    audit->add_option("--transcription", o.transcription, "Transcription file (default: bundled)");
    add_format(audit, o);

    auto* generate = app.add_subcommand("gen", "Emit a fixture graph as graph6");
    generate->add_option("kind", o.gen_kind, "cycle N | path N | complete N | circulant N o1,o2,... | petersen | "
                                             "random-tf N")
        ->required();
    generate->add_option("args", o.gen_args, "Generator arguments");
    generate->add_option("--seed", o.seed, "Seed for random-tf");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAllPass : kUsageError;
    }

    try {
        if (*analyze)
            return cmd_analyze(o, in, out, err);
        if (*verify)
            return cmd_verify(o, in, out);
        if (*degseq)
            return cmd_degseq(o, out);
        if (*tables)
            return cmd_tables(o, out);
        if (*partition)
            return cmd_partition(o, out);
        if (*layers)
            return cmd_layers(o, in, out);
        if (*audit)
            return cmd_audit(o, out);
        if (*generate)
            return cmd_gen(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace critgraph::cli
