#include "netgood/game_model.hpp"

#include <cassert>
#include <cmath>

#include "netgood/errors.hpp"

namespace netgood {

DependenceMatrix DependenceMatrix::from_matrix(Matrix g) {
    if (!g.is_square()) throw ValidationError("dependence matrix must be square");
    if (g.rows() < 1) throw ValidationError("dependence matrix needs at least one agent");
    if (!g.all_finite()) throw ValidationError("dependence matrix has non-finite entries");
    for (int i = 0; i < g.rows(); ++i)
        if (g(i, i) != 0.0)
            throw ValidationError("dependence matrix diagonal must be exactly zero (agent " +
                                  std::to_string(i) + ")");
    return DependenceMatrix(std::move(g));
}

DependenceMatrix DependenceMatrix::zero(int n) {
    return DependenceMatrix(Matrix(n, n, 0.0));
}

DependenceMatrix DependenceMatrix::with_weight(int i, int j, double w) const {
    if (i == j) throw ValidationError("cannot set a self-dependence weight");
    Matrix g = g_;
    g(i, j) = w;
    return DependenceMatrix::from_matrix(std::move(g));
}

BenefitFunction BenefitFunction::exponential(double saturation) {
    if (!(saturation > 0.0) || !std::isfinite(saturation))
        throw ValidationError("exponential benefit needs a positive saturation");
    return BenefitFunction(Family::Exponential, saturation);
}

BenefitFunction BenefitFunction::logarithmic(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ValidationError("logarithmic benefit needs a positive scale");
    return BenefitFunction(Family::Logarithmic, scale);
}

double BenefitFunction::value(double y) const {
    switch (family_) {
        case Family::Exponential:
            return param_ * (1.0 - std::exp(-y / param_));
        case Family::Logarithmic:
            if (1.0 + y <= 0.0)
                throw DomainError("logarithmic benefit undefined at aggregate " +
                                  std::to_string(y));
            return param_ * std::log1p(y);
    }
    return 0.0;
}

double BenefitFunction::derivative(double y) const {
    switch (family_) {
        case Family::Exponential:
            return std::exp(-y / param_);
        case Family::Logarithmic:
            if (1.0 + y <= 0.0)
                throw DomainError("logarithmic benefit undefined at aggregate " +
                                  std::to_string(y));
            return param_ / (1.0 + y);
    }
    return 0.0;
}

double BenefitFunction::derivative_inverse(double m) const {
    if (!marginal_in_range(m))
        throw DomainError("marginal benefit " + std::to_string(m) +
                          " is outside the derivative range");
    switch (family_) {
        case Family::Exponential:
            return -param_ * std::log(m);
        case Family::Logarithmic:
            return param_ / m - 1.0;
    }
    return 0.0;
}

std::string BenefitFunction::family_name() const {
    return family_ == Family::Exponential ? "exponential" : "logarithmic";
}

GameSpec make_game(DependenceMatrix g, std::vector<BenefitFunction> benefits, Vector costs) {
    const int n = g.size();
    if (static_cast<int>(benefits.size()) != n)
        throw ValidationError("benefit count must equal the agent count");
    if (static_cast<int>(costs.size()) != n)
        throw ValidationError("cost count must equal the agent count");
    for (int i = 0; i < n; ++i)
        if (!(costs[i] > 0.0) || !std::isfinite(costs[i]))
            throw ValidationError("marginal cost of agent " + std::to_string(i) +
                                  " must be positive and finite");
    return GameSpec{std::move(g), std::move(benefits), std::move(costs)};
}

GameSpec make_unit_exponential_game(DependenceMatrix g) {
    const int n = g.size();
    std::vector<BenefitFunction> b(n, BenefitFunction::exponential(1.0));
    Vector c(n, 1.0 / std::exp(1.0));
    return make_game(std::move(g), std::move(b), std::move(c));
}

CoalitionPartition CoalitionPartition::from_blocks(std::vector<std::vector<int>> blocks,
                                                   int n) {
    CoalitionPartition p;
    p.block_of_.assign(n, -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw ValidationError("coalition blocks must be nonempty");
        for (int agent : blocks[b]) {
            if (agent < 0 || agent >= n)
                throw ValidationError("coalition member index out of range: " +
                                      std::to_string(agent));
            if (p.block_of_[agent] != -1)
                throw ValidationError("agent " + std::to_string(agent) +
                                      " appears in two coalitions");
            p.block_of_[agent] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i)
        if (p.block_of_[i] == -1)
            throw ValidationError("agent " + std::to_string(i) + " belongs to no coalition");
    p.blocks_ = std::move(blocks);
    return p;
}

CoalitionPartition CoalitionPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks(n);
    for (int i = 0; i < n; ++i) blocks[i] = {i};
    return from_blocks(std::move(blocks), n);
}

CoalitionPartition CoalitionPartition::grand(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return from_blocks({all}, n);
}

WelfareWeights WelfareWeights::ones(int n) {
    WelfareWeights w;
    w.lambda_.assign(n, 1.0);
    return w;
}

WelfareWeights WelfareWeights::from_vector(Vector lambda) {
    for (double v : lambda)
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("welfare weights must be strictly positive");
    WelfareWeights w;
    w.lambda_ = std::move(lambda);
    return w;
}

double utility(const GameSpec& game, const Vector& x, int i) {
    assert(static_cast<int>(x.size()) == game.size());
    double agg = x[i];
    for (int j = 0; j < game.size(); ++j) agg += game.g.weight(i, j) * x[j];
    return game.benefits[i].value(agg) - game.costs[i] * x[i];
}

namespace {

std::string agent_list(const std::vector<int>& agents) {
    std::string s = "[";
    for (size_t i = 0; i < agents.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(agents[i]);
    }
    return s + "]";
}

}  // namespace

Vector standalone_target(const GameSpec& game) {
    const int n = game.size();
    Vector q(n);
    std::vector<int> bad;
    for (int i = 0; i < n; ++i) {
        if (!game.benefits[i].marginal_in_range(game.costs[i])) {
            bad.push_back(i);
            continue;
        }
        q[i] = game.benefits[i].derivative_inverse(game.costs[i]);
    }
    if (!bad.empty())
        throw CostOutOfRange(bad, "marginal cost outside the benefit derivative range "
                                  "for agents " +
                                      agent_list(bad));
    return q;
}

double best_response(const GameSpec& game, int i, const Vector& x) {
    const Vector q = standalone_target(game);
    double spill = 0.0;
    for (int j = 0; j < game.size(); ++j) spill += game.g.weight(i, j) * x[j];
    return std::max(0.0, q[i] - spill);
}

LCPInstance nash_lcp(const GameSpec& game) {
    const Vector q = standalone_target(game);
    Matrix m = add_scaled(Matrix::identity(game.size()), 1.0, game.g.weights());
    Vector neg_q(q.size());
    for (size_t i = 0; i < q.size(); ++i) neg_q[i] = -q[i];
    return make_lcp(std::move(m), std::move(neg_q));
}

Vector perceived_costs(const GameSpec& game, const WelfareWeights& lambda,
                       const Matrix& g_effective) {
    const int n = game.size();
    if (lambda.size() != n) throw ValidationError("lambda length must equal agent count");

    // I + L^-1 G_eff' L, entrywise 1[i=j] + (lambda_j / lambda_i) * g_eff(j, i)
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = (i == j ? 1.0 : 0.0) + (lambda[j] / lambda[i]) * g_effective(j, i);
    return solve_linear(a, game.costs);
}

namespace {

Vector invert_marginals(const GameSpec& game, const Vector& marginals) {
    const int n = game.size();
    Vector q(n);
    std::vector<int> bad;
    for (int i = 0; i < n; ++i) {
        if (!game.benefits[i].marginal_in_range(marginals[i])) {
            bad.push_back(i);
            continue;
        }
        q[i] = game.benefits[i].derivative_inverse(marginals[i]);
    }
    if (!bad.empty())
        throw PerceivedCostOutOfRange(
            bad, "no interior target: perceived cost nonpositive for agents " +
                     agent_list(bad));
    return q;
}

}  // namespace

Vector pareto_target(const GameSpec& game, const WelfareWeights& lambda) {
    return invert_marginals(game, perceived_costs(game, lambda, game.g.weights()));
}

DependenceMatrix coalition_modified_matrix(const DependenceMatrix& g,
                                           const CoalitionPartition& partition) {
    const int n = g.size();
    Matrix m = g.weights();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!partition.same_block(i, j)) m(i, j) = 0.0;
    return DependenceMatrix::from_matrix(std::move(m));
}

Vector semicoop_target(const GameSpec& game, const CoalitionPartition& partition,
                       const WelfareWeights& lambda) {
    const DependenceMatrix gc = coalition_modified_matrix(game.g, partition);
    return invert_marginals(game, perceived_costs(game, lambda, gc.weights()));
}

namespace {

Vector foc_residual_impl(const GameSpec& game, const WelfareWeights& lambda,
                         const Vector& x, const Matrix& correction) {
    const int n = game.size();
    assert(static_cast<int>(x.size()) == n);

    Vector marginal(n);
    for (int i = 0; i < n; ++i) {
        double agg = x[i];
        for (int j = 0; j < n; ++j) agg += game.g.weight(i, j) * x[j];
        marginal[i] = game.benefits[i].derivative(agg);
    }
    Vector res(n);
    for (int i = 0; i < n; ++i) {
        double s = marginal[i];
        for (int k = 0; k < n; ++k)
            if (k != i && correction(k, i) != 0.0)
                s += (lambda[k] / lambda[i]) * correction(k, i) * marginal[k];
        res[i] = s - game.costs[i];
    }
    return res;
}

}  // namespace

Vector pareto_foc_residual(const GameSpec& game, const WelfareWeights& lambda,
                           const Vector& x) {
    return foc_residual_impl(game, lambda, x, game.g.weights());
}

Vector semicoop_foc_residual(const GameSpec& game, const CoalitionPartition& partition,
                             const WelfareWeights& lambda, const Vector& x) {
    const DependenceMatrix gc = coalition_modified_matrix(game.g, partition);
    return foc_residual_impl(game, lambda, x, gc.weights());
}

}  // namespace netgood
