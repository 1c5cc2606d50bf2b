#include "oddsub/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddsub/certificate_json.hpp"
#include "oddsub/certify.hpp"
#include "oddsub/edge_list.hpp"
#include "oddsub/error.hpp"
#include "oddsub/families.hpp"
#include "oddsub/oracle.hpp"
#include "oddsub/scans.hpp"
#include "oddsub/structure.hpp"

namespace oddsub {

namespace {

using Clock = std::chrono::steady_clock;

// Largest target order for the --check oracle cross-check.
constexpr int kCheckOrder = 40;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_ids(const VertexSet& s) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < s.size(); ++i) ss << (i ? " " : "") << s.to_vector()[i];
    return ss.str();
}

struct SolveArgs {
    std::string input;
    std::optional<int> fk;
    std::optional<std::uint64_t> budget;
    int threads = 0;
    bool json = false;
    bool dedupe = false;
};

struct CertifyArgs {
    std::string input;
    std::string pipeline;
    std::string out_path;
    bool check = false;
    bool planar = false;
    bool json = false;
    bool dedupe = false;
};

struct ScanArgs {
    std::string name;
    std::uint64_t seed = 0;
    int threads = 0;
    bool json = false;
};

void emit(std::ostream& out, const RunReport& report, bool json) {
    if (json) {
        print_json_lines(out, report);
    } else {
        print_table(out, report);
    }
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(args.input, args.dedupe);
    if (g.order() > 0 && g.min_degree() == 0) {
        err << "warning: minimum degree 0; isolated vertices never belong to an odd induced subgraph\n";
    }
    SearchOptions options;
    options.budget = args.budget;
    options.threads = args.threads;
    const int modulus = args.fk.value_or(2);
    OracleResult r = args.fk ? fk_exact(g, modulus, options) : fo_exact(g, options);

    RunReport report{"solve", args.input, {}, {}};
    ReportItem item = make_item(args.input, Rational(r.value), std::nullopt);
    item.incomplete = !r.complete;
    item.pass = r.complete;
    item.seconds = std::chrono::duration<double>(r.elapsed).count();
    item.detail = {{"value", r.value},
                   {"modulus", modulus},
                   {"witness", r.witness.to_vector()},
                   {"nodes_explored", r.nodes_explored},
                   {"complete", r.complete},
                   {"n", g.order()},
                   {"m", g.edge_count()}};
    report.items.push_back(std::move(item));
    if (!r.complete) report.notes.push_back("node budget exhausted: value is a lower bound only");

    if (!args.json) {
        out << (args.fk ? "f_" + std::to_string(modulus) : std::string("f_o")) << " = " << r.value
            << (r.complete ? "" : " (incomplete, lower bound)") << '\n';
        out << "witness: " << join_ids(r.witness) << '\n';
        out << "nodes explored: " << r.nodes_explored << '\n';
    }
    emit(out, report, args.json);
    return report.exit_code();
}

// Odd induced subgraph of G inside the bipartite girth-6 reduction H; the target
// bound n/3 is what the bipartite half-bound for H would give.
Certificate planar_certificate(const Graph& g, bool planar_asserted) {
    VertexSet h_set = planar_reduction(g, planar_asserted);
    auto h = induced_subgraph(g, h_set);
    auto r = fo_exact(h.graph);
    Certificate cert;
    cert.target = CertificateTarget::Graph;
    cert.theorem_tag = "planar";
    cert.bound = Rational(g.order(), 3);
    std::vector<Vertex> witness;
    for (Vertex v : r.witness) witness.push_back(h.original[v]);
    cert.witness = VertexSet(std::move(witness));
    cert.trace.push_back("bipartite girth>=6 reduction on " + std::to_string(h_set.size()) + " of " +
                         std::to_string(g.order()) + " vertices: [" + join_ids(h_set) + "]");
    cert.trace.push_back("exact f_o inside the reduction = " + std::to_string(r.value));
    return cert;
}

Certificate run_pipeline(const Graph& g, const CertifyArgs& args) {
    if (args.pipeline == "clawfree") return clawfree_cert(g);
    if (args.pipeline == "linegraph") return linegraph_cert(g);
    if (args.pipeline == "linegraph-ext") return linegraph_cert_extended(g);
    if (args.pipeline == "planar") return planar_certificate(g, args.planar);
    throw PreconditionError("unknown pipeline '" + args.pipeline + "'");
}

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(args.input, args.dedupe);
    RunReport report{"certify", args.input, {}, {}};
    const auto start = Clock::now();
    Certificate cert;
    try {
        cert = run_pipeline(g, args);
    } catch (const BoundNotAchieved& e) {
        err << "bound not achieved: " << e.what() << '\n';
        ReportItem item = make_item(args.input, Rational(static_cast<std::int64_t>(e.best().size())), e.required());
        item.seconds = seconds_since(start);
        item.detail = {{"pipeline", args.pipeline}, {"best", e.best().to_vector()}};
        report.items.push_back(std::move(item));
        emit(out, report, args.json);
        return report.exit_code();
    }

    ReportItem item = make_item(args.input, Rational(cert.size()), cert.bound);
    item.seconds = seconds_since(start);
    item.checks_ok = verify_certificate(g, cert);
    item.detail = {{"pipeline", args.pipeline}};
    if (args.check) {
        Graph target = cert.target == CertificateTarget::LineGraph ? line_graph(g).lg : g;
        if (target.order() <= kCheckOrder) {
            auto r = fo_exact(target);
            item.detail["oracle_value"] = r.value;
            item.checks_ok = item.checks_ok && r.complete && r.value >= cert.size();
        } else {
            report.notes.push_back("oracle cross-check skipped: target order " + std::to_string(target.order()) + " > " +
                                   std::to_string(kCheckOrder));
        }
    }
    const auto doc = certificate_to_json(g, cert);
    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path);
        if (!file) throw GraphError("cannot write '" + args.out_path + "'");
        file << doc.dump(2) << '\n';
        report.notes.push_back("certificate written to " + args.out_path);
    } else if (args.json) {
        item.detail["certificate"] = doc;
    } else {
        out << doc.dump() << '\n';
    }
    report.items.push_back(std::move(item));
    emit(out, report, args.json);
    return report.exit_code();
}

int cmd_scan(const ScanArgs& args, std::ostream& out) {
    SearchOptions options;
    options.threads = args.threads;
    RunReport report = run_scan(args.name, args.seed, options);
    emit(out, report, args.json);
    return report.exit_code();
}

}  // namespace

ReportItem make_item(std::string id, Rational achieved, std::optional<Rational> bound) {
    ReportItem item;
    item.id = std::move(id);
    item.achieved = achieved.to_string();
    item.bound = bound ? bound->to_string() : "-";
    item.pass = !bound || achieved >= *bound;
    return item;
}

int RunReport::passed() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; }));
}

int RunReport::ok_count() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.ok(); }));
}

bool RunReport::any_incomplete() const {
    return std::any_of(items.begin(), items.end(), [](const ReportItem& i) { return i.incomplete; });
}

int RunReport::exit_code() const {
    return ok_count() == static_cast<int>(items.size()) ? kExitOk : kExitFailure;
}

void print_table(std::ostream& out, const RunReport& report) {
    std::size_t id_width = 2;
    for (const auto& item : report.items) id_width = std::max(id_width, item.id.size());
    out << "oddsub " << report.command << "  input: " << report.input << '\n';
    out << std::left << std::setw(static_cast<int>(id_width) + 2) << "id" << std::setw(12) << "achieved" << std::setw(12)
        << "bound" << std::setw(6) << "pass" << std::setw(10) << "expected" << "time" << '\n';
    for (const auto& item : report.items) {
        std::ostringstream time;
        time << std::fixed << std::setprecision(3) << item.seconds << "s";
        out << std::left << std::setw(static_cast<int>(id_width) + 2) << item.id << std::setw(12) << item.achieved
            << std::setw(12) << item.bound << std::setw(6) << (item.pass ? "yes" : "no") << std::setw(10)
            << (item.expected_pass ? "pass" : "fail") << time.str();
        if (item.incomplete) out << "  INCOMPLETE";
        if (!item.checks_ok) out << "  CHECK FAILED";
        out << '\n';
    }
    for (const auto& note : report.notes) out << "note: " << note << '\n';
    out << report.items.size() << " item(s): " << report.passed() << " meet the bound, " << report.ok_count() << "/"
        << report.items.size() << " as expected\n";
}

void print_json_lines(std::ostream& out, const RunReport& report) {
    for (const auto& item : report.items) {
        nlohmann::json line = {{"command", report.command}, {"id", item.id},
                               {"achieved", item.achieved}, {"bound", item.bound},
                               {"pass", item.pass},         {"expected_pass", item.expected_pass},
                               {"checks_ok", item.checks_ok}, {"incomplete", item.incomplete},
                               {"ok", item.ok()},           {"seconds", item.seconds}};
        for (const auto& [key, value] : item.detail.items()) line[key] = value;
        out << line.dump() << '\n';
    }
    nlohmann::json summary = {{"command", report.command},
                              {"input", report.input},
                              {"summary", {{"items", report.items.size()},
                                           {"passed", report.passed()},
                                           {"ok", report.ok_count()},
                                           {"exit_code", report.exit_code()}}},
                              {"notes", report.notes}};
    out << summary.dump() << '\n';
}

Graph load_graph(const std::string& input, bool dedupe) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) return read_edge_list_file(input, dedupe);
    try {
        return generate_family(parse_family(input));
    } catch (const GraphError& e) {
        throw GraphError("'" + input + "' is neither a readable edge-list file nor a family spec: " + e.what());
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Odd induced subgraphs: exact search, certificates and verification scans", "oddsub"};
    app.require_subcommand(1);
    app.footer(family_grammar_help());

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Exact f_o (or f_k with --fk) of a graph");
    solve_cmd->add_option("input", solve.input, "Edge-list file or family spec")->required();
    solve_cmd->add_option("--fk", solve.fk, "Solve f_k for this modulus instead of f_o")->check(CLI::Range(2, 1 << 20));
    solve_cmd->add_option("--budget", solve.budget, "Search-tree node limit");
    solve_cmd->add_option("--threads", solve.threads, "Worker threads (0: ODDSUB_THREADS or 1)")->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--json", solve.json, "One JSON object per line");
    solve_cmd->add_flag("--dedupe", solve.dedupe, "Merge duplicate edges instead of rejecting them");

    CertifyArgs certify;
    auto* certify_cmd = app.add_subcommand("certify", "Build and check a lower-bound certificate");
    certify_cmd->add_option("input", certify.input, "Edge-list file or family spec")->required();
    certify_cmd->add_option("--pipeline", certify.pipeline, "Certificate pipeline")
        ->required()
        ->check(CLI::IsMember({"clawfree", "linegraph", "linegraph-ext", "planar"}));
    certify_cmd->add_option("--out", certify.out_path, "Write the certificate JSON here");
    certify_cmd->add_flag("--check", certify.check, "Cross-check against the exact oracle on small targets");
    certify_cmd->add_flag("--planar", certify.planar, "Assert that the input graph is planar");
    certify_cmd->add_flag("--json", certify.json, "One JSON object per line");
    certify_cmd->add_flag("--dedupe", certify.dedupe, "Merge duplicate edges instead of rejecting them");

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Run a verification scan");
    scan_cmd->add_option("name", scan.name,
                         "wangwu-min-counterexample | cycle-table | counterexample-orders:<a>..<b> | "
                         "clawfree-random:<n>,<trials>[,<seed>]")
        ->required();
    scan_cmd->add_option("--seed", scan.seed, "Seed used when the scan spec omits one");
    scan_cmd->add_option("--threads", scan.threads, "Worker threads (0: ODDSUB_THREADS or 1)")->check(CLI::NonNegativeNumber);
    scan_cmd->add_flag("--json", scan.json, "One JSON object per line");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve, out, err);
        if (*certify_cmd) return cmd_certify(certify, out, err);
        return cmd_scan(scan, out);
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace oddsub
