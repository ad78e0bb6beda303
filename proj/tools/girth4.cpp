// Command-line front end: construct, verify, bound, search, export.
//
// Exit codes: 0 success / solution found; 1 verification failure;
// 2 bad flags or unparseable input; 3 search exhausted with no solution;
// 4 search budget exceeded.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "girth4/construction.hpp"
#include "girth4/search.hpp"
#include "girth4/serialize.hpp"
#include "girth4/theta.hpp"
#include "girth4/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;
constexpr int kExitBudget = 4;

using nlohmann::ordered_json;

int run_bound(int n) {
    girth4::ThetaValue theta = girth4::theta4(n);
    ordered_json j;
    j["n"] = n;
    j["lower_bound"] = girth4::girth4_lower_bound(n);
    if (theta.is_exact()) {
        j["theta"] = ordered_json{{"kind", "exact"}, {"value", theta.upper()}};
    } else {
        j["theta"] = ordered_json{{"kind", "range"}, {"lo", theta.lower()}, {"hi", theta.upper()}};
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int run_decompose(int n, const std::string& format, const std::string& out_path,
                  girth4::LabelMode labels, const std::filesystem::path& fixtures_dir) {
    girth4::Decomposition d = girth4::decompose(n, fixtures_dir);
    girth4::VerificationReport report = girth4::verify(d);

    std::string payload =
        format == "dot" ? girth4::to_dot(d, labels) : girth4::decomposition_to_json(d);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << payload;
    }
    std::cout << girth4::report_to_json(report);
    if (!report.ok) return kExitVerificationFailure;
    return kExitOk;
}

int run_verify(const std::string& in_path, std::optional<int> girth_override) {
    girth4::Decomposition d = girth4::load_decomposition(in_path);
    if (girth_override) d.girth_claim = *girth_override;
    girth4::VerificationReport report = girth4::verify(d);
    std::cout << girth4::report_to_json(report);
    return report.ok ? kExitOk : kExitVerificationFailure;
}

int run_search(const girth4::SearchConfig& cfg, const std::string& out_path,
               const std::filesystem::path& log_path) {
    girth4::SearchOutcome outcome = girth4::search_decomposition(cfg);
    {
        std::ofstream log(log_path, std::ios::app);
        if (!log) {
            std::cerr << "cannot write " << log_path << "\n";
            return kExitUsage;
        }
        log << girth4::search_log_line(outcome, girth4::utc_timestamp());
    }
    std::cout << girth4::outcome_to_json(outcome);
    if (outcome.decomposition && !out_path.empty()) {
        // embed the producing config so the file documents how to regenerate it
        ordered_json full = ordered_json::parse(girth4::outcome_to_json(outcome));
        ordered_json saved = full["decomposition"];
        saved["generator"] = full["config"];
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << saved.dump() << "\n";
    }
    switch (outcome.status) {
    case girth4::SearchStatus::Found: return kExitOk;
    case girth4::SearchStatus::ExhaustedNoSolution: return kExitExhausted;
    case girth4::SearchStatus::BudgetExceeded: return kExitBudget;
    }
    return kExitUsage;
}

int run_ramsey(int n) {
    girth4::RamseyCount count = girth4::ramsey_triangle_check(n);
    ordered_json j;
    j["n"] = n;
    j["colorings"] = count.colorings;
    j["both_triangle_free"] = count.both_triangle_free;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

// Budgets are entered in scientific notation (1e8); parse via double.
std::uint64_t parse_budget(double value) {
    if (!(value >= 1) || !(value <= 1e18) || std::floor(value) != value)
        throw CLI::ValidationError("node budget must be a positive integer up to 1e18");
    return static_cast<std::uint64_t>(value);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar girth-4 decompositions of complete graphs"};
    app.require_subcommand(1);

    int bound_n = 0;
    CLI::App* bound = app.add_subcommand("bound", "print the counting lower bound and theta");
    bound->add_option("--n", bound_n, "order of the complete graph")->required()
        ->check(CLI::PositiveNumber);

    int dec_n = 0;
    std::string dec_format = "json";
    std::string dec_out;
    std::string dec_labels = "int";
    std::string dec_fixtures = "fixtures";
    CLI::App* dec = app.add_subcommand("decompose", "construct and verify a decomposition");
    dec->add_option("--n", dec_n, "order of the complete graph")->required()
        ->check(CLI::PositiveNumber);
    dec->add_option("--format", dec_format, "output format")->check(CLI::IsMember({"json", "dot"}));
    dec->add_option("--out", dec_out, "output file (stdout when omitted)");
    dec->add_option("--labels", dec_labels, "vertex labels in dot output")
        ->check(CLI::IsMember({"int", "paper"}));
    dec->add_option("--fixtures-dir", dec_fixtures, "directory with the small-order fixtures");

    std::string ver_in;
    std::optional<int> ver_girth;
    CLI::App* ver = app.add_subcommand("verify", "verify a decomposition file");
    ver->add_option("--in", ver_in, "decomposition JSON file")->required();
    ver->add_option("--girth", ver_girth, "override the file's girth claim");

    girth4::SearchConfig cfg;
    double search_nodes = 1e6;
    std::string search_out;
    std::string search_log = "k10-log.jsonl";
    CLI::App* sea = app.add_subcommand("search", "backtracking search for a decomposition");
    sea->add_option("--n", cfg.n, "order of the complete graph")->required()
        ->check(CLI::PositiveNumber);
    sea->add_option("--parts", cfg.parts, "number of parts")->required()
        ->check(CLI::PositiveNumber);
    sea->add_option("--girth", cfg.girth, "minimum girth per part")->check(CLI::Range(3, 1000));
    sea->add_option("--node-budget", search_nodes, "max edge-assignment attempts, e.g. 1e8");
    sea->add_option("--time-budget", cfg.time_budget_seconds, "wall-clock cap in seconds")
        ->check(CLI::PositiveNumber);
    sea->add_option("--seed", cfg.seed, "part-order tie-break seed (0 = index order)");
    sea->add_flag("--no-symmetry-breaking{false}", cfg.symmetry_breaking,
                  "disable the part-relabeling symmetry rule");
    sea->add_option("--out", search_out, "write a found decomposition here");
    sea->add_option("--log", search_log, "append one JSON stats line per run");

    int ramsey_n = 6;
    CLI::App* ram = app.add_subcommand("ramsey-k6", "count 2-colorings with no monochromatic triangle");
    ram->add_option("--n", ramsey_n, "order (default 6)")->check(CLI::Range(1, 7));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bound->parsed()) return run_bound(bound_n);
        if (dec->parsed()) {
            girth4::LabelMode mode =
                dec_labels == "paper" ? girth4::LabelMode::Paper : girth4::LabelMode::Integer;
            return run_decompose(dec_n, dec_format, dec_out, mode, dec_fixtures);
        }
        if (ver->parsed()) return run_verify(ver_in, ver_girth);
        if (sea->parsed()) {
            cfg.node_budget = parse_budget(search_nodes);
            return run_search(cfg, search_out, search_log);
        }
        if (ram->parsed()) return run_ramsey(ramsey_n);
    } catch (const girth4::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
