#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netgood/game_model.hpp"
#include "netgood/matrix_analysis.hpp"

namespace netgood {

enum class SolveMode { One, All };

struct SolveDiagnostics {
    int lemke_pivots = 0;
    bool ray_termination = false;
    int singular_supports = 0;
    double max_lcp_residual = 0.0;
    double max_foc_residual = 0.0;
    std::string note;
};

/// Solver output: profiles with per-profile interiority, the matrix
/// classification verdicts, and a solver trace.
struct SolveReport {
    std::vector<EffortProfile> profiles;
    ClassificationReport verdicts;
    std::vector<bool> interiority;
    SolveDiagnostics diagnostics;
    Vector target;           // q vector the LCP was built from
    Vector perceived_costs;  // Pareto / semi-cooperative solves only
};

/// Nash profiles of the game. Mode One runs complementary pivoting (a ray
/// termination is recorded, not thrown); mode All runs the enumeration
/// oracle under its dimension cap.
SolveReport solve_nash(const GameSpec& game, SolveMode mode, double tol = 1e-9);

/// Is `target` reachable as (I+G) x with x >= 0? LP feasibility via
/// phase-1 simplex (solutions with x_i = 0 count as interior).
bool interior_exists(const GameSpec& game, const Vector& target, double tol = 1e-9);

/// Interior efficient profile for weights lambda: x = (I+G)^-1 q^lambda,
/// accepted when nonnegative and the welfare FOC residual vanishes.
/// A clean "no interior profile" outcome is reported, not thrown.
SolveReport solve_pareto(const GameSpec& game, const WelfareWeights& lambda,
                         double tol = 1e-9);

/// Interior semi-cooperative equilibrium for a coalition partition.
SolveReport solve_semicoop(const GameSpec& game, const CoalitionPartition& partition,
                           const WelfareWeights& lambda, double tol = 1e-9);

enum class DynamicsVerdict { Converged, Diverged, Oscillating };

struct DynamicsResult {
    DynamicsVerdict verdict = DynamicsVerdict::Oscillating;
    Vector final_x;
    int iterations = 0;
    double last_step = 0.0;              // ||x_{t+1} - x_t||_inf at exit
    std::vector<Vector> trajectory;      // x_0 .. x_T
};

/// Synchronous best-reply iteration x <- max(0, qbar - G x).
DynamicsResult best_response_dynamics(const GameSpec& game, const Vector& x0,
                                      int max_iter = 10000, double tol = 1e-9);

/// Direct check of the equilibrium definition: no agent can gain more than
/// `tol` by a unilateral grid deviation of `steps` points within `radius`.
bool grid_oracle_is_nash(const GameSpec& game, const Vector& x, double radius,
                         int steps, double tol);

enum class PerturbationFailure { None, NoProfile, TargetRange, Singular };

struct PerturbationResult {
    int from = 0;
    int to = 0;
    double old_weight = 0.0;
    double new_weight = 0.0;
    std::optional<EffortProfile> baseline;
    std::optional<EffortProfile> perturbed;
    Vector delta;  // perturbed.x - baseline.x when both sides solved
    PerturbationFailure baseline_failure = PerturbationFailure::None;
    PerturbationFailure perturbed_failure = PerturbationFailure::None;
    std::string failed_side;      // "", "baseline", "perturbed" or "baseline and perturbed"
    std::string failure_reason;
};

struct PerturbationRequest {
    EffortProfile::Kind kind = EffortProfile::Kind::Nash;
    Vector lambda;                         // defaults to all-ones
    std::vector<std::vector<int>> blocks;  // SemiCoop only
};

/// Re-solve the game before and after changing one edge weight and report
/// per-agent effort deltas.
PerturbationResult perturb_edge(const GameSpec& game, int i, int j, double new_weight,
                                const PerturbationRequest& request, double tol = 1e-9);

}  // namespace netgood
