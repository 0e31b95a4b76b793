#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netgood/cli.hpp"
#include "netgood/errors.hpp"

namespace {

double default_tolerance() {
    if (const char* env = std::getenv("NETGOOD_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
        std::cerr << "warning: ignoring invalid NETGOOD_TOL='" << env << "'\n";
    }
    return 1e-9;
}

netgood::Vector parse_number_list(const std::string& text, const char* flag) {
    netgood::Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double x = std::strtod(item.c_str(), &end);
        if (end == item.c_str())
            throw netgood::ValidationError(std::string(flag) +
                                           " expects comma-separated numbers");
        v.push_back(x);
    }
    return v;
}

struct OutputTarget {
    std::string path;  // empty: stdout

    int write(const std::function<int(std::ostream&)>& f) const {
        if (path.empty()) return f(std::cout);
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return 1;
        }
        return f(out);
    }
};

}  // namespace

int main(int argc, char** argv) {
    using namespace netgood;

    CLI::App app{"netgood: public-good provision games on weighted directed networks"};
    app.require_subcommand(1);

    const double tol_default = default_tolerance();
    std::string input;
    OutputTarget target;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "game document (JSON)")->required();
        cmd->add_option("-o,--output", target.path, "write the report to a file");
    };

    // classify
    auto* c_classify = app.add_subcommand("classify", "matrix classes and verdicts");
    double classify_tol = tol_default;
    add_common(c_classify);
    c_classify->add_option("--tol", classify_tol, "numerical tolerance");

    // solve
    auto* c_solve = app.add_subcommand("solve", "Nash / Pareto / coalition profiles");
    cli::SolveFlags solve_flags;
    solve_flags.tol = tol_default;
    std::string solve_lambda;
    add_common(c_solve);
    c_solve->add_option("--kind", solve_flags.kind, "nash | pareto | coalition")
        ->check(CLI::IsMember({"nash", "pareto", "coalition"}));
    c_solve->add_flag("--all", solve_flags.all, "enumerate all Nash profiles");
    c_solve->add_option("--lambda", solve_lambda, "welfare weights, comma-separated");
    c_solve->add_option("--tol", solve_flags.tol, "numerical tolerance");

    // centrality
    auto* c_cent = app.add_subcommand("centrality", "alpha / Katz / Bonacich measures");
    cli::CentralityFlags cent_flags;
    cent_flags.tol = tol_default;
    add_common(c_cent);
    c_cent->add_option("--alpha", cent_flags.alpha, "attenuation parameter (default -1)");
    c_cent->add_option("--exo", cent_flags.exo, "ones | qbar | comma-separated numbers");
    c_cent->add_option("--measure", cent_flags.measure, "alpha | katz | bonacich | all")
        ->check(CLI::IsMember({"alpha", "katz", "bonacich", "all"}));
    c_cent->add_option("--beta", cent_flags.beta, "Bonacich scale (default 1)");
    c_cent->add_option("--depth", cent_flags.depth, "Katz truncation depth (default 60)")
        ->check(CLI::PositiveNumber);
    c_cent->add_option("--tol", cent_flags.tol, "numerical tolerance");

    // whatif
    auto* c_whatif = app.add_subcommand("whatif", "re-solve after changing one edge weight");
    cli::WhatIfFlags whatif_flags;
    whatif_flags.tol = tol_default;
    std::vector<int> edge_pair;
    std::string whatif_lambda;
    add_common(c_whatif);
    c_whatif->add_option("--edge", edge_pair, "edge endpoints: from to")
        ->expected(2)
        ->required();
    c_whatif->add_option("--weight", whatif_flags.weight, "new edge weight")->required();
    c_whatif->add_option("--kind", whatif_flags.kind, "nash | pareto | coalition")
        ->check(CLI::IsMember({"nash", "pareto", "coalition"}));
    c_whatif->add_option("--lambda", whatif_lambda, "welfare weights, comma-separated");
    c_whatif->add_option("--tol", whatif_flags.tol, "numerical tolerance");

    // dynamics
    auto* c_dyn = app.add_subcommand("dynamics", "synchronous best-response iteration");
    cli::DynamicsFlags dyn_flags;
    dyn_flags.tol = tol_default;
    std::string x0_text;
    add_common(c_dyn);
    c_dyn->add_option("--x0", x0_text, "starting profile, comma-separated (default zeros)");
    c_dyn->add_option("--max-iter", dyn_flags.max_iter, "iteration cap (default 10000)")
        ->check(CLI::PositiveNumber);
    c_dyn->add_option("--tol", dyn_flags.tol, "convergence tolerance");
    c_dyn->add_flag("--trace", dyn_flags.trace, "include the full trajectory");

    // export
    auto* c_export = app.add_subcommand("export", "emit the graph as DOT or CSV");
    std::string export_format = "dot";
    add_common(c_export);
    c_export->add_option("--format", export_format, "dot | csv")
        ->check(CLI::IsMember({"dot", "csv"}));

    CLI11_PARSE(app, argc, argv);

    return cli::run_guarded(
        [&]() -> int {
            const GameDocument doc = GameDocument::parse_file(input);
            if (c_classify->parsed())
                return target.write(
                    [&](std::ostream& o) { return cli::run_classify(doc, classify_tol, o); });
            if (c_solve->parsed()) {
                if (!solve_lambda.empty())
                    solve_flags.lambda = parse_number_list(solve_lambda, "--lambda");
                return target.write(
                    [&](std::ostream& o) { return cli::run_solve(doc, solve_flags, o); });
            }
            if (c_cent->parsed())
                return target.write(
                    [&](std::ostream& o) { return cli::run_centrality(doc, cent_flags, o); });
            if (c_whatif->parsed()) {
                whatif_flags.from = edge_pair[0];
                whatif_flags.to = edge_pair[1];
                if (!whatif_lambda.empty())
                    whatif_flags.lambda = parse_number_list(whatif_lambda, "--lambda");
                return target.write(
                    [&](std::ostream& o) { return cli::run_whatif(doc, whatif_flags, o); });
            }
            if (c_dyn->parsed()) {
                if (!x0_text.empty()) dyn_flags.x0 = parse_number_list(x0_text, "--x0");
                return target.write(
                    [&](std::ostream& o) { return cli::run_dynamics(doc, dyn_flags, o); });
            }
            if (c_export->parsed())
                return target.write(
                    [&](std::ostream& o) { return cli::run_export(doc, export_format, o); });
            return 1;
        },
        std::cerr);
}
