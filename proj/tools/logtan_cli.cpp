// Batch front end: logtan <phi|lemma-scan|remark|graph|cycle> [options]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logtan/error.hpp"
#include "logtan/report.hpp"

namespace {

constexpr int kInputErrorExit = 2;

std::vector<logtan::BigInt> parse_steps(const std::vector<std::string>& raw) {
    std::vector<logtan::BigInt> steps;
    for (const auto& s : raw) steps.push_back(logtan::parse_bigint(s));
    return steps;
}

nlohmann::json read_document(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw logtan::InputError("cannot open input file '" + path + "'");
        buffer << in.rdbuf();
    }
    try {
        return nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw logtan::InputError("input document is not valid JSON: " + std::string(e.what()));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued-fraction Moebius maps, curve-cycle intersection matrices "
                 "and Camacho-Sad index propagation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json", "structured"}));
    app.add_option("--jobs", jobs, "Worker threads for scans (0 = all cores)");

    std::vector<std::string> steps_raw;
    std::optional<std::string> x;
    auto* phi = app.add_subcommand("phi", "Analyze the continued-fraction map of a step sequence");
    phi->add_option("--steps", steps_raw, "Steps e1,...,er")->delimiter(',')->required();
    phi->add_option("--x", x, "Point to evaluate (p/q, u:v or inf)");

    long r = 0;
    long bound = 0;
    std::size_t guard = logtan::ScanLimits{}.max_length;
    auto* scan = app.add_subcommand("lemma-scan", "Find tuples whose every permutation gives the identity");
    scan->add_option("--r", r, "Tuple length")->required();
    scan->add_option("--bound", bound, "Bound on |e_i|")->required();
    scan->add_option("--guard", guard, "Largest tuple length accepted")->capture_default_str();

    long r_max = 0;
    auto* remark = app.add_subcommand("remark", "Identity table for constant step sequences");
    remark->add_option("--r-max", r_max, "Largest length")->required();

    std::string input;
    auto* graph = app.add_subcommand("graph", "Analyze a curve configuration document");
    graph->add_option("--input", input, "Graph document path, - for stdin")->required();

    std::optional<std::string> x0;
    bool scan_mode = false;
    logtan::ObstructionScanBounds bounds;
    auto* cycle = app.add_subcommand("cycle", "Index propagation around a cycle of rational curves");
    cycle->add_option("--steps", steps_raw, "Self-intersections e1,...,er")->delimiter(',');
    cycle->add_option("--x0", x0, "Starting index (p/q, u:v or inf)");
    cycle->add_flag("--scan", scan_mode, "Exhaustive obstruction sweep");
    cycle->add_option("--r-min", bounds.r_min, "Scan: shortest cycle")->capture_default_str();
    cycle->add_option("--r-max", bounds.r_max, "Scan: longest cycle")->capture_default_str();
    cycle->add_option("--e-min", bounds.e_min, "Scan: smallest self-intersection")->capture_default_str();
    cycle->add_option("--e-max", bounds.e_max, "Scan: largest self-intersection")->capture_default_str();
    cycle->add_option("--guard", guard, "Longest cycle accepted by the scan")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const logtan::ScanLimits limits{guard, jobs};
        logtan::report::Report out;
        if (phi->parsed()) {
            out = logtan::report::run_phi(parse_steps(steps_raw), x);
        } else if (scan->parsed()) {
            out = logtan::report::run_lemma_scan(r, bound, limits);
        } else if (remark->parsed()) {
            out = logtan::report::run_remark(r_max);
        } else if (graph->parsed()) {
            out = logtan::report::run_graph(read_document(input));
        } else if (scan_mode) {
            out = logtan::report::run_cycle_scan(bounds, limits);
        } else {
            out = logtan::report::run_cycle(parse_steps(steps_raw), x0);
        }
        std::cout << logtan::report::render(out, logtan::report::parse_format(format));
    } catch (const logtan::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputErrorExit;
    }
    return 0;
}
