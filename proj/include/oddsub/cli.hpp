#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddsub/graph.hpp"
#include "oddsub/rational.hpp"

namespace oddsub {

/// One row of a report. `pass` is achieved >= bound (or search completion when
/// there is no bound); `expected_pass` is what the verified statement predicts.
struct ReportItem {
    std::string id;
    std::string achieved;
    std::string bound;
    bool pass = false;
    bool expected_pass = true;
    /// Side conditions checked alongside the bound (e.g. oracle cross-checks).
    bool checks_ok = true;
    bool incomplete = false;
    double seconds = 0.0;
    nlohmann::json detail = nlohmann::json::object();

    bool ok() const { return !incomplete && checks_ok && pass == expected_pass; }
};

ReportItem make_item(std::string id, Rational achieved, std::optional<Rational> bound);

struct RunReport {
    std::string command;
    std::string input;
    std::vector<ReportItem> items;
    std::vector<std::string> notes;

    int passed() const;
    int ok_count() const;
    bool any_incomplete() const;
    /// 0 when every item meets its expectation, 2 otherwise.
    int exit_code() const;
};

void print_table(std::ostream& out, const RunReport& report);
void print_json_lines(std::ostream& out, const RunReport& report);

/// Reads `input` as an edge-list file when such a file exists, otherwise as a family spec.
Graph load_graph(const std::string& input, bool dedupe = false);

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFailure = 2 };

/// Entry point of the `oddsub` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddsub
