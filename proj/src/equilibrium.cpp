#include "netgood/equilibrium.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "netgood/errors.hpp"
#include "netgood/simplex.hpp"

namespace netgood {

namespace {

// The interiority convention: zero slack everywhere, where coordinates with
// x_i = 0 and w_i = 0 still count as interior.
bool is_interior(const Vector& w, double tol) {
    for (double v : w)
        if (v > tol) return false;
    return true;
}

EffortProfile nash_profile(Vector x) {
    EffortProfile p;
    p.x = std::move(x);
    p.kind = EffortProfile::Kind::Nash;
    return p;
}

}  // namespace

SolveReport solve_nash(const GameSpec& game, SolveMode mode, double tol) {
    SolveReport report;
    report.verdicts = classify(game.g, tol);
    const LCPInstance inst = nash_lcp(game);
    report.target = standalone_target(game);

    if (mode == SolveMode::One) {
        const LemkeResult res = lemke_solve(inst, tol);
        report.diagnostics.lemke_pivots = res.pivots;
        if (res.solved()) {
            report.profiles.push_back(nash_profile(res.solution->x));
            report.interiority.push_back(is_interior(res.solution->w, tol));
        } else {
            report.diagnostics.ray_termination = true;
            report.diagnostics.note = "complementary pivoting ended on a ray";
        }
    } else {
        const EnumerationResult res = enumerate_solutions(inst, tol);
        report.diagnostics.singular_supports = res.singular_supports;
        for (const auto& sol : res.solutions) {
            report.profiles.push_back(nash_profile(sol.x));
            report.interiority.push_back(is_interior(sol.w, tol));
        }
    }

    for (const auto& p : report.profiles) {
        Vector w = inst.m * p.x;
        double residual = 0.0;
        for (int i = 0; i < inst.size(); ++i) {
            w[i] += inst.q[i];
            residual = std::max(residual, -std::min(w[i], 0.0));
            residual = std::max(residual, std::abs(w[i] * p.x[i]));
        }
        report.diagnostics.max_lcp_residual =
            std::max(report.diagnostics.max_lcp_residual, residual);
    }

    if (report.profiles.empty()) {
        if (report.diagnostics.note.empty()) report.diagnostics.note = "no equilibrium found";
        if (report.verdicts.existence_verdict == ExistenceVerdict::IffSpectralRadiusLtOne &&
            report.verdicts.spectral_radius >= 1.0)
            report.diagnostics.note += "; existence condition fails: spectral_radius(G) = " +
                                       std::to_string(report.verdicts.spectral_radius) +
                                       " >= 1";
    }
    return report;
}

bool interior_exists(const GameSpec& game, const Vector& target, double tol) {
    const int n = game.size();
    const Matrix ig = add_scaled(Matrix::identity(n), 1.0, game.g.weights());
    // (I+G) x = target, x >= 0  <=>  both inequality directions hold.
    Matrix a(2 * n, n);
    Vector rhs(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = ig(i, j);
            a(n + i, j) = -ig(i, j);
        }
        rhs[i] = target[i];
        rhs[n + i] = -target[i];
    }
    return lp_inequality_feasible(a, rhs, Vector(n, 0.0), tol);
}

SolveReport solve_pareto(const GameSpec& game, const WelfareWeights& lambda, double tol) {
    SolveReport report;
    report.verdicts = classify(game.g, tol);
    report.perceived_costs = perceived_costs(game, lambda, game.g.weights());
    report.target = pareto_target(game, lambda);

    const int n = game.size();
    const Matrix ig = add_scaled(Matrix::identity(n), 1.0, game.g.weights());
    const Vector x = solve_linear(ig, report.target);

    double xmin = 0.0;
    for (double v : x) xmin = std::min(xmin, v);
    if (xmin < -tol) {
        report.diagnostics.note = "no interior profile: resolvent solution has negative efforts";
        return report;
    }

    Vector clipped = x;
    for (double& v : clipped) v = std::max(v, 0.0);
    const Vector foc = pareto_foc_residual(game, lambda, clipped);
    report.diagnostics.max_foc_residual = inf_norm(foc);
    if (report.diagnostics.max_foc_residual > 1e-6) {
        report.diagnostics.note = "no interior profile: welfare FOC residual " +
                                  std::to_string(report.diagnostics.max_foc_residual);
        return report;
    }

    EffortProfile p;
    p.x = std::move(clipped);
    p.kind = EffortProfile::Kind::Pareto;
    p.lambda = lambda.values();
    report.profiles.push_back(std::move(p));
    report.interiority.push_back(true);
    return report;
}

SolveReport solve_semicoop(const GameSpec& game, const CoalitionPartition& partition,
                           const WelfareWeights& lambda, double tol) {
    SolveReport report;
    report.verdicts = classify(game.g, tol);
    const DependenceMatrix gc = coalition_modified_matrix(game.g, partition);
    report.perceived_costs = perceived_costs(game, lambda, gc.weights());
    report.target = semicoop_target(game, partition, lambda);

    const int n = game.size();
    const Matrix ig = add_scaled(Matrix::identity(n), 1.0, game.g.weights());
    const Vector x = solve_linear(ig, report.target);

    double xmin = 0.0;
    for (double v : x) xmin = std::min(xmin, v);
    if (xmin < -tol) {
        report.diagnostics.note =
            "no interior profile: resolvent solution has negative efforts";
        return report;
    }

    Vector clipped = x;
    for (double& v : clipped) v = std::max(v, 0.0);
    const Vector foc = semicoop_foc_residual(game, partition, lambda, clipped);
    report.diagnostics.max_foc_residual = inf_norm(foc);
    if (report.diagnostics.max_foc_residual > 1e-6) {
        report.diagnostics.note = "no interior profile: coalition FOC residual " +
                                  std::to_string(report.diagnostics.max_foc_residual);
        return report;
    }

    EffortProfile p;
    p.x = std::move(clipped);
    p.kind = EffortProfile::Kind::SemiCoop;
    p.lambda = lambda.values();
    p.blocks = partition.blocks();
    report.profiles.push_back(std::move(p));
    // Interiority through the positive-cone feasibility check.
    report.interiority.push_back(interior_exists(game, report.target, tol));
    return report;
}

DynamicsResult best_response_dynamics(const GameSpec& game, const Vector& x0,
                                      int max_iter, double tol) {
    const int n = game.size();
    assert(static_cast<int>(x0.size()) == n);
    for (double v : x0)
        if (v < 0.0) throw ValidationError("dynamics need a nonnegative starting profile");

    const Vector qbar = standalone_target(game);
    double qmax = 1.0;
    for (double v : qbar) qmax = std::max(qmax, v);
    const double divergence_bound = 1e6 * qmax;

    DynamicsResult out;
    out.trajectory.push_back(x0);
    Vector x = x0;
    Vector prev;

    for (int iter = 0; iter <= max_iter; ++iter) {
        Vector next(n);
        for (int i = 0; i < n; ++i) {
            double spill = 0.0;
            for (int j = 0; j < n; ++j) spill += game.g.weight(i, j) * x[j];
            next[i] = std::max(0.0, qbar[i] - spill);
        }
        out.last_step = inf_dist(next, x);

        if (out.last_step < tol) {
            // x is a fixed point within tol; iterations counts genuine moves.
            out.verdict = DynamicsVerdict::Converged;
            out.final_x = std::move(x);
            out.iterations = iter;
            return out;
        }
        if (iter == max_iter) break;

        out.trajectory.push_back(next);
        out.iterations = iter + 1;
        if (inf_norm(next) > divergence_bound) {
            out.verdict = DynamicsVerdict::Diverged;
            out.final_x = std::move(next);
            return out;
        }
        if (!prev.empty() && inf_dist(next, prev) < tol) {
            out.verdict = DynamicsVerdict::Oscillating;
            out.final_x = std::move(next);
            return out;
        }
        prev = std::move(x);
        x = std::move(next);
    }
    out.verdict = DynamicsVerdict::Oscillating;
    out.final_x = std::move(x);
    return out;
}

bool grid_oracle_is_nash(const GameSpec& game, const Vector& x, double radius,
                         int steps, double tol) {
    const int n = game.size();
    assert(static_cast<int>(x.size()) == n);
    assert(steps >= 2);

    for (int i = 0; i < n; ++i) {
        const double base = utility(game, x, i);
        const double lo = std::max(0.0, x[i] - radius);
        const double hi = x[i] + radius;
        Vector trial = x;
        for (int s = 0; s < steps; ++s) {
            trial[i] = lo + (hi - lo) * s / (steps - 1);
            if (utility(game, trial, i) > base + tol) return false;
        }
    }
    return true;
}

namespace {

SolveReport solve_for_kind(const GameSpec& game, const PerturbationRequest& req,
                           double tol) {
    switch (req.kind) {
        case EffortProfile::Kind::Nash:
            return solve_nash(game, SolveMode::One, tol);
        case EffortProfile::Kind::Pareto: {
            const auto lambda = req.lambda.empty()
                                    ? WelfareWeights::ones(game.size())
                                    : WelfareWeights::from_vector(req.lambda);
            return solve_pareto(game, lambda, tol);
        }
        case EffortProfile::Kind::SemiCoop: {
            const auto lambda = req.lambda.empty()
                                    ? WelfareWeights::ones(game.size())
                                    : WelfareWeights::from_vector(req.lambda);
            const auto partition = CoalitionPartition::from_blocks(req.blocks, game.size());
            return solve_semicoop(game, partition, lambda, tol);
        }
    }
    return {};
}

std::optional<EffortProfile> solve_side(const GameSpec& game,
                                        const PerturbationRequest& req, double tol,
                                        PerturbationFailure& failure,
                                        std::string& reason) {
    try {
        const SolveReport report = solve_for_kind(game, req, tol);
        if (!report.profiles.empty()) return report.profiles.front();
        failure = PerturbationFailure::NoProfile;
        reason = report.diagnostics.note;
    } catch (const CostOutOfRange& e) {
        failure = PerturbationFailure::TargetRange;
        reason = e.what();
    } catch (const PerceivedCostOutOfRange& e) {
        failure = PerturbationFailure::TargetRange;
        reason = e.what();
    } catch (const SingularSystem& e) {
        failure = PerturbationFailure::Singular;
        reason = e.what();
    }
    return std::nullopt;
}

}  // namespace

PerturbationResult perturb_edge(const GameSpec& game, int i, int j, double new_weight,
                                const PerturbationRequest& request, double tol) {
    PerturbationResult out;
    out.from = i;
    out.to = j;
    out.old_weight = game.g.weight(i, j);
    out.new_weight = new_weight;

    std::string reason;
    out.baseline = solve_side(game, request, tol, out.baseline_failure, reason);
    if (!out.baseline) {
        out.failed_side = "baseline";
        out.failure_reason = "baseline: " + reason;
    }

    GameSpec perturbed_game{game.g.with_weight(i, j, new_weight), game.benefits, game.costs};
    out.perturbed = solve_side(perturbed_game, request, tol, out.perturbed_failure, reason);
    if (!out.perturbed) {
        out.failed_side = out.failed_side.empty() ? "perturbed" : "baseline and perturbed";
        if (!out.failure_reason.empty()) out.failure_reason += "; ";
        out.failure_reason += "perturbed: " + reason;
    }

    if (out.baseline && out.perturbed)
        out.delta = sub(out.perturbed->x, out.baseline->x);
    return out;
}

}  // namespace netgood
