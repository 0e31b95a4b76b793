#include "netgood/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "netgood/centrality.hpp"
#include "netgood/equilibrium.hpp"
#include "netgood/errors.hpp"
#include "netgood/matrix_analysis.hpp"
#include "netgood/report_writer.hpp"

namespace netgood {
namespace cli {

namespace {

void write_classification(JsonWriter& w, const ClassificationReport& r) {
    w.begin_object();
    w.key("p_matrix").value(r.is_p);
    w.key("z_matrix").value(r.is_z);
    w.key("l_matrix").value(r.is_l);
    w.key("s_matrix").value(r.is_s);
    w.key("strictly_diagonally_dominant").value(r.is_sdd);
    w.key("spectral_radius").value(r.spectral_radius);
    w.key("min_real_eigenvalue");
    if (r.min_real_eigenvalue)
        w.value(*r.min_real_eigenvalue);
    else
        w.null_value();
    w.key("uniqueness").value(to_string(r.uniqueness_verdict));
    w.key("existence").value(to_string(r.existence_verdict));
    w.key("citations").begin_array();
    for (const auto& c : r.citations) w.value(c);
    w.end_array();
    w.end_object();
}

std::vector<int> boundary_interior_coordinates(const Vector& x, const Vector& w,
                                               double tol) {
    std::vector<int> idx;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] <= tol && std::abs(w[i]) <= tol) idx.push_back(static_cast<int>(i));
    return idx;
}

void write_profile(JsonWriter& w, const GameSpec& game, const Vector& target,
                   const Vector& x, bool interior, double tol) {
    const int n = game.size();
    const Matrix ig = add_scaled(Matrix::identity(n), 1.0, game.g.weights());
    Vector slack = sub(ig * x, target);

    w.begin_object();
    w.key("x").number_array(x);
    w.key("w").number_array(slack);
    w.key("interior").value(interior);
    w.key("boundary_interior_coordinates")
        .int_array(boundary_interior_coordinates(x, slack, std::max(tol, 1e-12)));
    double lcp_residual = 0.0;
    for (int i = 0; i < n; ++i) {
        lcp_residual = std::max(lcp_residual, -std::min(slack[i], 0.0));
        lcp_residual = std::max(lcp_residual, -std::min(x[i], 0.0));
        lcp_residual = std::max(lcp_residual, std::abs(slack[i] * x[i]));
    }
    w.key("lcp_residual").value(lcp_residual);
    w.end_object();
}

void write_diagnostics(JsonWriter& w, const SolveDiagnostics& d) {
    w.begin_object();
    w.key("lemke_pivots").value(d.lemke_pivots);
    w.key("ray_termination").value(d.ray_termination);
    w.key("singular_supports").value(d.singular_supports);
    w.key("max_lcp_residual").value(d.max_lcp_residual);
    w.key("max_foc_residual").value(d.max_foc_residual);
    w.key("note").value(d.note);
    w.end_object();
}

Vector resolve_lambda(const GameDocument& doc, const Vector& flag_lambda) {
    if (!flag_lambda.empty()) return flag_lambda;
    if (doc.lambda) return *doc.lambda;
    return Vector(doc.n, 1.0);
}

}  // namespace

int run_classify(const GameDocument& doc, double tol, std::ostream& out) {
    const ClassificationReport r = classify(doc.dependence_matrix(), tol);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("classify");
    w.key("n").value(doc.n);
    w.key("tolerance").value(tol);
    w.key("classification");
    write_classification(w, r);
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_solve(const GameDocument& doc, const SolveFlags& flags, std::ostream& out) {
    const GameSpec game = doc.to_game();
    const double tol = flags.tol;

    SolveReport report;
    Vector lambda_used;
    if (flags.kind == "nash") {
        report = solve_nash(game, flags.all ? SolveMode::All : SolveMode::One, tol);
    } else if (flags.kind == "pareto") {
        lambda_used = resolve_lambda(doc, flags.lambda);
        report = solve_pareto(game, WelfareWeights::from_vector(lambda_used), tol);
    } else if (flags.kind == "coalition") {
        if (!doc.coalitions)
            throw ValidationError("kind=coalition requires a 'coalitions' field");
        lambda_used = resolve_lambda(doc, flags.lambda);
        report = solve_semicoop(game, CoalitionPartition::from_blocks(*doc.coalitions, doc.n),
                                WelfareWeights::from_vector(lambda_used), tol);
    } else {
        throw ValidationError("unknown solve kind '" + flags.kind + "'");
    }

    JsonWriter w;
    w.begin_object();
    w.key("command").value("solve");
    w.key("kind").value(flags.kind);
    w.key("n").value(doc.n);
    w.key("mode").value(flags.kind == "nash" ? (flags.all ? "all" : "one") : "interior");
    w.key("tolerance").value(tol);
    if (!lambda_used.empty()) w.key("lambda").number_array(lambda_used);
    w.key("target").number_array(report.target);
    if (!report.perceived_costs.empty())
        w.key("perceived_costs").number_array(report.perceived_costs);
    w.key("profile_count").value(static_cast<int>(report.profiles.size()));
    w.key("profiles").begin_array();
    for (size_t i = 0; i < report.profiles.size(); ++i)
        write_profile(w, game, report.target, report.profiles[i].x, report.interiority[i],
                      tol);
    w.end_array();
    w.key("classification");
    write_classification(w, report.verdicts);
    w.key("diagnostics");
    write_diagnostics(w, report.diagnostics);
    w.end_object();
    out << w.str();
    return report.profiles.empty() ? kExitNoProfile : kExitOk;
}

namespace {

Vector resolve_exo(const GameSpec& game, const std::string& exo) {
    if (exo == "ones") return Vector(game.size(), 1.0);
    if (exo == "qbar") return standalone_target(game);
    // comma-separated numbers
    Vector e;
    std::stringstream ss(exo);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || !std::isfinite(v))
            throw ValidationError("--exo expects 'ones', 'qbar', or comma-separated numbers");
        e.push_back(v);
    }
    if (static_cast<int>(e.size()) != game.size())
        throw ValidationError("--exo vector length must equal n");
    return e;
}

void write_centrality_result(JsonWriter& w, const CentralityResult& r) {
    w.begin_object();
    w.key("values").number_array(r.values);
    w.key("convergence")
        .value(r.convergence == CentralityResult::Convergence::Closed ? "closed"
                                                                      : "series_truncated");
    if (r.measure == CentralityResult::Measure::Katz) {
        w.key("depth").value(r.depth);
        w.key("residual").value(r.residual);
    }
    if (r.measure == CentralityResult::Measure::Bonacich) w.key("beta").value(r.beta);
    w.end_object();
}

}  // namespace

int run_centrality(const GameDocument& doc, const CentralityFlags& flags,
                   std::ostream& out) {
    const GameSpec game = doc.to_game();
    const Matrix& g = game.g.weights();
    const Vector e = resolve_exo(game, flags.exo);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("centrality");
    w.key("n").value(doc.n);
    w.key("alpha").value(flags.alpha);
    w.key("exogenous").number_array(e);
    w.key("measure").value(flags.measure);

    if (flags.measure == "alpha") {
        w.key("alpha_centrality");
        write_centrality_result(w, alpha_centrality(g, flags.alpha, e));
    } else if (flags.measure == "katz") {
        w.key("katz");
        write_centrality_result(w, katz_centrality(g, flags.alpha, e, flags.depth));
    } else if (flags.measure == "bonacich") {
        w.key("bonacich");
        write_centrality_result(w, bonacich_centrality(g, flags.alpha, flags.beta));
    } else if (flags.measure == "all") {
        w.key("alpha_centrality");
        write_centrality_result(w, alpha_centrality(g, flags.alpha, e));
        w.key("katz");
        write_centrality_result(w, katz_centrality(g, flags.alpha, e, flags.depth));
        w.key("bonacich");
        write_centrality_result(w, bonacich_centrality(g, flags.alpha, flags.beta));
        bool symmetric = true;
        for (int i = 0; i < doc.n; ++i)
            for (int j = 0; j < i; ++j)
                if (g(i, j) != g(j, i)) symmetric = false;
        w.key("identity").begin_object();
        w.key("applicable").value(symmetric);
        if (symmetric) {
            const bool holds = verify_measure_identity(g, flags.alpha, flags.tol);
            w.key("holds").value(holds);
            w.key("tolerance").value(flags.tol);
        }
        w.end_object();
    } else {
        throw ValidationError("unknown measure '" + flags.measure + "'");
    }
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_whatif(const GameDocument& doc, const WhatIfFlags& flags, std::ostream& out) {
    const GameSpec game = doc.to_game();
    if (flags.from < 0 || flags.from >= doc.n || flags.to < 0 || flags.to >= doc.n ||
        flags.from == flags.to)
        throw ValidationError("--edge expects two distinct agent indices in range");

    PerturbationRequest req;
    if (flags.kind == "nash") {
        req.kind = EffortProfile::Kind::Nash;
    } else if (flags.kind == "pareto") {
        req.kind = EffortProfile::Kind::Pareto;
        req.lambda = resolve_lambda(doc, flags.lambda);
    } else if (flags.kind == "coalition") {
        if (!doc.coalitions)
            throw ValidationError("kind=coalition requires a 'coalitions' field");
        req.kind = EffortProfile::Kind::SemiCoop;
        req.lambda = resolve_lambda(doc, flags.lambda);
        req.blocks = *doc.coalitions;
    } else {
        throw ValidationError("unknown whatif kind '" + flags.kind + "'");
    }

    const PerturbationResult res =
        perturb_edge(game, flags.from, flags.to, flags.weight, req, flags.tol);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("whatif");
    w.key("kind").value(flags.kind);
    w.key("edge").begin_array().value(flags.from).value(flags.to).end_array();
    w.key("old_weight").value(res.old_weight);
    w.key("new_weight").value(res.new_weight);
    w.key("baseline");
    if (res.baseline)
        w.begin_object().key("x").number_array(res.baseline->x).end_object();
    else
        w.null_value();
    w.key("perturbed");
    if (res.perturbed)
        w.begin_object().key("x").number_array(res.perturbed->x).end_object();
    else
        w.null_value();
    w.key("delta");
    if (!res.delta.empty()) {
        w.number_array(res.delta);
        w.key("sign_summary").begin_array();
        for (double d : res.delta)
            w.value(d > flags.tol ? "+" : (d < -flags.tol ? "-" : "0"));
        w.end_array();
    } else {
        w.null_value();
    }
    w.key("failed_side").value(res.failed_side);
    if (!res.failure_reason.empty()) w.key("failure_reason").value(res.failure_reason);
    w.end_object();
    out << w.str();

    const auto worst = std::max(res.baseline_failure, res.perturbed_failure);
    switch (worst) {
        case PerturbationFailure::None: return kExitOk;
        case PerturbationFailure::NoProfile: return kExitNoProfile;
        case PerturbationFailure::TargetRange: return kExitTargetRange;
        case PerturbationFailure::Singular: return kExitSingular;
    }
    return kExitOk;
}

int run_dynamics(const GameDocument& doc, const DynamicsFlags& flags, std::ostream& out) {
    const GameSpec game = doc.to_game();
    Vector x0 = flags.x0.empty() ? Vector(doc.n, 0.0) : flags.x0;
    if (static_cast<int>(x0.size()) != doc.n)
        throw ValidationError("--x0 vector length must equal n");

    const DynamicsResult res = best_response_dynamics(game, x0, flags.max_iter, flags.tol);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("dynamics");
    w.key("n").value(doc.n);
    w.key("verdict").value(res.verdict == DynamicsVerdict::Converged    ? "converged"
                           : res.verdict == DynamicsVerdict::Diverged   ? "diverged"
                                                                        : "oscillating");
    w.key("iterations").value(res.iterations);
    w.key("last_step").value(res.last_step);
    w.key("final").number_array(res.final_x);
    if (flags.trace) {
        w.key("trajectory").begin_array();
        for (const auto& x : res.trajectory) w.number_array(x);
        w.end_array();
    }
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_export(const GameDocument& doc, const std::string& format, std::ostream& out) {
    if (format == "dot") {
        out << export_dot(doc);
    } else if (format == "csv") {
        out << export_csv(doc);
    } else {
        throw ValidationError("unknown export format '" + format + "'");
    }
    return kExitOk;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const DimensionTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const CostOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kExitTargetRange;
    } catch (const PerceivedCostOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kExitTargetRange;
    } catch (const SingularSystem& e) {
        err << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace netgood
