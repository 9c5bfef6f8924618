// Command-line calculator for ordinal arithmetic under the lexicographic
// product, band products modulo the finite condensation, and the
// condensation derivative calculus. Exit codes: 0 ok, 1 evaluation error,
// 2 syntax error, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/ordcalc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvalError = 1;
constexpr int kExitSyntaxError = 2;
constexpr int kExitVerifyFailure = 3;

struct OutputOptions {
    bool json = false;
    bool trace = false;
};

/// Evaluate one expression and print its result (or error). Returns an exit
/// code; errors never terminate the caller's loop.
int eval_line(const std::string& line, const OutputOptions& opts, std::ostream& out) {
    std::vector<std::string> trace;
    try {
        const ordcalc::EvalResult result =
            ordcalc::eval_string(line, opts.trace ? &trace : nullptr);
        if (opts.json) {
            out << ordcalc::to_json(line, result, opts.trace ? &trace : nullptr).dump() << "\n";
        } else {
            if (opts.trace)
                for (const std::string& step : trace) out << "  ; " << step << "\n";
            out << ordcalc::pretty(result) << "\n";
        }
        return kExitOk;
    } catch (const ordcalc::SyntaxError& e) {
        out << "error: " << e.what() << "\n";
        return kExitSyntaxError;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitEvalError;
    }
}

int run_batch(const std::string& path, const OutputOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitEvalError;
    }
    int worst = kExitOk;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        worst = std::max(worst, eval_line(line, opts, std::cout));
    }
    return worst;
}

int run_repl(OutputOptions opts) {
    std::string line;
    std::cout << "ordcalc -- ordinal calculator (:quit to exit)\n";
    for (;;) {
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == ':') {
            std::istringstream meta(line.substr(start + 1));
            std::string cmd, arg;
            meta >> cmd >> arg;
            if (cmd == "quit" || cmd == "q") break;
            if (cmd == "trace" && (arg == "on" || arg == "off")) {
                opts.trace = arg == "on";
            } else if (cmd == "json" && (arg == "on" || arg == "off")) {
                opts.json = arg == "on";
            } else {
                std::cout << "meta commands: :quit, :trace on|off, :json on|off\n";
            }
            continue;
        }
        eval_line(line, opts, std::cout);
    }
    return kExitOk;
}

nlohmann::ordered_json report_to_json(const ordcalc::VerificationReport& report) {
    nlohmann::ordered_json j;
    j["bounds"] = {{"max_degree", report.bounds.max_degree},
                   {"max_coeff", report.bounds.max_coeff},
                   {"max_scalar", report.bounds.max_scalar}};
    j["shards"] = report.shards;
    j["suites"] = nlohmann::ordered_json::array();
    for (const ordcalc::SuiteResult& s : report.suites) {
        nlohmann::ordered_json e;
        e["name"] = s.name;
        e["checks"] = s.checks;
        e["failures"] = s.failures;
        if (s.failures > 0) e["first_counterexample"] = s.first_counterexample;
        e["millis"] = s.millis;
        j["suites"].push_back(std::move(e));
    }
    j["total_checks"] = report.total_checks();
    j["total_failures"] = report.total_failures();
    j["wall_millis"] = report.wall_millis;
    return j;
}

int run_verify_cmd(const ordcalc::VerifyBounds& bounds, unsigned shards, bool json) {
    const ordcalc::VerificationReport report = ordcalc::run_verify(bounds, shards);
    if (json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        for (const ordcalc::SuiteResult& s : report.suites) {
            std::cout << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << "  checks="
                      << s.checks;
            if (s.failures > 0)
                std::cout << " failures=" << s.failures << " first=" << s.first_counterexample;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", s.millis);
            std::cout << "  (" << buf << " ms)\n";
        }
        std::cout << (report.ok() ? "OK" : "FAILED") << ": " << report.total_checks()
                  << " checks, " << report.total_failures() << " failures\n";
    }
    return report.ok() ? kExitOk : kExitVerifyFailure;
}

int run_table(bool json) {
    using ordcalc::BandElement;
    if (json) {
        nlohmann::ordered_json j;
        j["table"] = nlohmann::ordered_json::object();
        for (BandElement x : ordcalc::kBandElements) {
            nlohmann::ordered_json row;
            for (BandElement y : ordcalc::kBandElements)
                row[ordcalc::to_string(y)] = ordcalc::to_string(ordcalc::times_f(x, y));
            j["table"][ordcalc::to_string(x)] = std::move(row);
        }
        j["hasse_edges"] = nlohmann::ordered_json::array();
        for (const auto& [lo, hi] : ordcalc::hasse_edges())
            j["hasse_edges"].push_back({ordcalc::to_string(lo), ordcalc::to_string(hi)});
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    auto cell = [](const std::string& s) {
        std::string out = s;
        out.resize(12, ' ');
        return out;
    };
    std::cout << cell(".F") ;
    for (BandElement y : ordcalc::kBandElements) std::cout << cell(ordcalc::to_string(y));
    std::cout << "\n";
    for (BandElement x : ordcalc::kBandElements) {
        std::cout << cell(ordcalc::to_string(x));
        for (BandElement y : ordcalc::kBandElements)
            std::cout << cell(ordcalc::to_string(ordcalc::times_f(x, y)));
        std::cout << "\n";
    }
    std::cout << "hasse edges (lower < upper):";
    for (const auto& [lo, hi] : ordcalc::hasse_edges())
        std::cout << " (" << ordcalc::to_string(lo) << ", " << ordcalc::to_string(hi) << ")";
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordinal calculator: lexicographic-product arithmetic and the finite-condensation calculus"};
    app.require_subcommand(1);

    std::string expr_text;
    OutputOptions eval_opts;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
    eval_cmd->add_option("expression", expr_text, "expression to evaluate")->required();
    eval_cmd->add_flag("--json", eval_opts.json, "emit a JSON object");
    eval_cmd->add_flag("--trace", eval_opts.trace, "show condensation rewrite steps");

    CLI::App* repl_cmd = app.add_subcommand("repl", "interactive session");

    std::string batch_path;
    OutputOptions batch_opts;
    CLI::App* batch_cmd = app.add_subcommand("batch", "evaluate a file, one expression per line");
    batch_cmd->add_option("file", batch_path, "input file ('#' starts a comment)")->required();
    batch_cmd->add_flag("--json", batch_opts.json, "emit one JSON object per line");
    batch_cmd->add_flag("--trace", batch_opts.trace, "show condensation rewrite steps");

    ordcalc::VerifyBounds bounds;
    unsigned shards = 1;
    bool verify_json = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run every property suite");
    verify_cmd->add_option("--max-degree", bounds.max_degree, "largest exponent enumerated")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-coeff", bounds.max_coeff, "largest coefficient enumerated")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-scalar", bounds.max_scalar, "largest scalar enumerated")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--shards", shards, "worker threads for the enumeration loops")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");

    bool table_json = false;
    CLI::App* table_cmd = app.add_subcommand("table", "print the band multiplication table");
    table_cmd->add_flag("--json", table_json, "emit the table as JSON");

    CLI11_PARSE(app, argc, argv);

    if (eval_cmd->parsed()) return eval_line(expr_text, eval_opts, std::cout);
    if (repl_cmd->parsed()) return run_repl(eval_opts);
    if (batch_cmd->parsed()) return run_batch(batch_path, batch_opts);
    if (verify_cmd->parsed()) return run_verify_cmd(bounds, shards, verify_json);
    if (table_cmd->parsed()) return run_table(table_json);
    return kExitOk;
}
