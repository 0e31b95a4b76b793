#include "netgood/centrality.hpp"

#include <cassert>
#include <cmath>

#include "netgood/errors.hpp"

namespace netgood {

CentralityResult alpha_centrality(const Matrix& g, double alpha, const Vector& e) {
    assert(g.is_square());
    assert(g.rows() == static_cast<int>(e.size()));
    const Matrix a = add_scaled(Matrix::identity(g.rows()), -alpha, g);

    CentralityResult r;
    r.measure = CentralityResult::Measure::Alpha;
    r.convergence = CentralityResult::Convergence::Closed;
    r.alpha = alpha;
    r.values = solve_linear(a, e);
    return r;
}

CentralityResult katz_centrality(const Matrix& g, double alpha, const Vector& e,
                                 int depth) {
    assert(depth >= 1);
    CentralityResult r;
    r.measure = CentralityResult::Measure::Katz;
    r.convergence = CentralityResult::Convergence::SeriesTruncated;
    r.alpha = alpha;
    r.depth = depth;

    Vector term = e;          // alpha^k G^k e after the update below
    Vector sum(e.size(), 0.0);
    for (int k = 1; k <= depth; ++k) {
        term = g * term;
        for (double& v : term) v *= alpha;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
    }
    r.values = std::move(sum);
    r.residual = inf_norm(term);
    return r;
}

CentralityResult bonacich_centrality(const Matrix& r_mat, double alpha, double beta) {
    assert(r_mat.is_square());
    const int n = r_mat.rows();
    Vector row_sums(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) row_sums[i] += r_mat(i, j);

    const Matrix a = add_scaled(Matrix::identity(n), -alpha, r_mat);
    Vector v = solve_linear(a, row_sums);
    for (double& x : v) x *= beta;

    CentralityResult r;
    r.measure = CentralityResult::Measure::Bonacich;
    r.convergence = CentralityResult::Convergence::Closed;
    r.alpha = alpha;
    r.beta = beta;
    r.values = std::move(v);
    return r;
}

bool verify_measure_identity(const Matrix& a, double alpha, double tol) {
    const int n = a.rows();
    const Vector ones(n, 1.0);

    const Vector v_alpha = alpha_centrality(a, alpha, ones).values;
    const Vector v_bon = bonacich_centrality(a, alpha, 1.0).values;

    // Closed form of the series: (-I + (I - alpha A)^-1) 1.
    Vector v_katz(n);
    for (int i = 0; i < n; ++i) v_katz[i] = v_alpha[i] - 1.0;

    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        err = std::max(err, std::abs(v_alpha[i] - (1.0 + alpha * v_bon[i])));
        err = std::max(err, std::abs(v_alpha[i] - (1.0 + v_katz[i])));
    }
    return err <= tol;
}

namespace {

// Targets of efficient play, rebuilt through the centrality route: perceived
// costs are the alpha-centralities (at -1) of the weighted influence matrix,
// with c as the exogenous vector.
Vector target_via_centrality(const GameSpec& game, const WelfareWeights& lambda,
                             const Matrix& g_effective) {
    const int n = game.size();
    Matrix infl(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            infl(i, j) = (lambda[j] / lambda[i]) * g_effective(j, i);
    const Vector pc = alpha_centrality(infl, -1.0, game.costs).values;
    Vector q(n);
    std::vector<int> bad;
    for (int i = 0; i < n; ++i) {
        if (!game.benefits[i].marginal_in_range(pc[i])) {
            bad.push_back(i);
            continue;
        }
        q[i] = game.benefits[i].derivative_inverse(pc[i]);
    }
    if (!bad.empty())
        throw PerceivedCostOutOfRange(bad, "no interior target: perceived cost nonpositive");
    return q;
}

}  // namespace

bool centrality_effort_check(const GameSpec& game, const EffortProfile& profile,
                             double tol) {
    const int n = game.size();
    assert(static_cast<int>(profile.x.size()) == n);

    Vector target;
    switch (profile.kind) {
        case EffortProfile::Kind::Nash:
            target = standalone_target(game);
            break;
        case EffortProfile::Kind::Pareto:
            target = target_via_centrality(game, WelfareWeights::from_vector(profile.lambda),
                                           game.g.weights());
            break;
        case EffortProfile::Kind::SemiCoop: {
            const auto partition = CoalitionPartition::from_blocks(profile.blocks, n);
            const DependenceMatrix gc = coalition_modified_matrix(game.g, partition);
            target = target_via_centrality(game, WelfareWeights::from_vector(profile.lambda),
                                           gc.weights());
            break;
        }
    }

    // Interior means zero slack: (I+G) x - target = 0 up to tol.
    const Matrix ig = add_scaled(Matrix::identity(n), 1.0, game.g.weights());
    const Vector slack_vec = sub(ig * profile.x, target);
    for (int i = 0; i < n; ++i)
        if (slack_vec[i] > tol)
            throw NotInterior("profile has positive slack at agent " + std::to_string(i));

    const Vector via_centrality = alpha_centrality(game.g.weights(), -1.0, target).values;
    return inf_dist(profile.x, via_centrality) <= tol;
}

}  // namespace netgood
