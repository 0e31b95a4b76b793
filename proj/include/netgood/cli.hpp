#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "netgood/game_document.hpp"

namespace netgood {
namespace cli {

// Exit code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNoProfile = 4;
inline constexpr int kExitTargetRange = 5;
inline constexpr int kExitSingular = 6;

struct SolveFlags {
    std::string kind = "nash";  // nash | pareto | coalition
    bool all = false;
    double tol = 1e-9;
    Vector lambda;  // empty: document value, then all-ones
};

struct CentralityFlags {
    std::string measure = "alpha";  // alpha | katz | bonacich | all
    double alpha = -1.0;
    std::string exo = "ones";  // ones | qbar | comma-separated numbers
    double beta = 1.0;
    int depth = 60;
    double tol = 1e-9;
};

struct WhatIfFlags {
    int from = 0;
    int to = 0;
    double weight = 0.0;
    std::string kind = "nash";
    Vector lambda;
    double tol = 1e-9;
};

struct DynamicsFlags {
    Vector x0;  // empty: all zeros
    int max_iter = 10000;
    double tol = 1e-9;
    bool trace = false;
};

int run_classify(const GameDocument& doc, double tol, std::ostream& out);
int run_solve(const GameDocument& doc, const SolveFlags& flags, std::ostream& out);
int run_centrality(const GameDocument& doc, const CentralityFlags& flags, std::ostream& out);
int run_whatif(const GameDocument& doc, const WhatIfFlags& flags, std::ostream& out);
int run_dynamics(const GameDocument& doc, const DynamicsFlags& flags, std::ostream& out);
int run_export(const GameDocument& doc, const std::string& format, std::ostream& out);

/// Run `body`, mapping thrown library errors onto the exit-code contract
/// and printing the diagnostic to `err`.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace cli
}  // namespace netgood
