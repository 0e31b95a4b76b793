#pragma once

#include <string>
#include <vector>

#include "netgood/lcp.hpp"
#include "netgood/linalg.hpp"

namespace netgood {

/// Weighted dependence structure of the game: entry (i, j) is the weight
/// with which agent i's aggregate effort counts agent j's effort. Positive
/// weights are substitutes, negative weights complements. Diagonal must be
/// exactly zero; self-terms always enter with weight one.
struct DependenceMatrix {
    static DependenceMatrix from_matrix(Matrix g);
    static DependenceMatrix zero(int n);

    int size() const { return g_.rows(); }
    const Matrix& weights() const { return g_; }
    double weight(int i, int j) const { return g_(i, j); }

    DependenceMatrix with_weight(int i, int j, double w) const;

private:
    explicit DependenceMatrix(Matrix g) : g_(std::move(g)) {}
    Matrix g_;
};

/// Strictly increasing, strictly concave benefit of aggregate effort.
/// Two parametric families:
///   Exponential(s):  b(y) = s * (1 - exp(-y/s)),   defined on all of R
///   Logarithmic(a):  b(y) = a * ln(1 + y),         defined on y > -1
/// Both have b' with range (0, inf), so the derivative inverse accepts
/// exactly the positive reals.
class BenefitFunction {
public:
    enum class Family { Exponential, Logarithmic };

    static BenefitFunction exponential(double saturation);
    static BenefitFunction logarithmic(double scale);

    double value(double y) const;
    double derivative(double y) const;

    /// Domain of the derivative inverse.
    bool marginal_in_range(double m) const { return m > 0.0; }
    /// y with b'(y) = m; caller must check marginal_in_range first.
    double derivative_inverse(double m) const;

    Family family() const { return family_; }
    double parameter() const { return param_; }
    std::string family_name() const;

private:
    BenefitFunction(Family f, double p) : family_(f), param_(p) {}
    Family family_;
    double param_;
};

/// Immutable game description: network, per-agent benefits, marginal costs.
struct GameSpec {
    DependenceMatrix g;
    std::vector<BenefitFunction> benefits;
    Vector costs;

    int size() const { return g.size(); }
};

GameSpec make_game(DependenceMatrix g, std::vector<BenefitFunction> benefits, Vector costs);

/// Convenience: every agent Exponential(1) with cost 1/e, so the
/// standalone target is exactly 1.
GameSpec make_unit_exponential_game(DependenceMatrix g);

struct CoalitionPartition {
    static CoalitionPartition from_blocks(std::vector<std::vector<int>> blocks, int n);
    static CoalitionPartition singletons(int n);
    static CoalitionPartition grand(int n);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Block index of each agent.
    const std::vector<int>& block_of() const { return block_of_; }
    bool same_block(int i, int j) const { return block_of_[i] == block_of_[j]; }

private:
    CoalitionPartition() = default;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Strictly positive Pareto weights.
struct WelfareWeights {
    static WelfareWeights ones(int n);
    static WelfareWeights from_vector(Vector lambda);

    const Vector& values() const { return lambda_; }
    int size() const { return static_cast<int>(lambda_.size()); }
    double operator[](int i) const { return lambda_[i]; }

private:
    WelfareWeights() = default;
    Vector lambda_;
};

struct EffortProfile {
    enum class Kind { Nash, Pareto, SemiCoop };
    Vector x;
    Kind kind = Kind::Nash;
    Vector lambda;                          // Pareto / SemiCoop
    std::vector<std::vector<int>> blocks;   // SemiCoop
};

// Operations ---------------------------------------------------------------

/// Payoff of agent i at profile x: b_i(x_i + sum_j g_ij x_j) - c_i x_i.
double utility(const GameSpec& game, const Vector& x, int i);

/// Standalone targets: q_i with b_i'(q_i) = c_i.
Vector standalone_target(const GameSpec& game);

/// max(0, q_i - sum_j g_ij x_j)
double best_response(const GameSpec& game, int i, const Vector& x);

/// LCP whose solutions are the game's Nash equilibria: (I+G, -qbar).
LCPInstance nash_lcp(const GameSpec& game);

/// Network- and weight-modified marginal costs:
/// (I + L^-1 G_eff' L)^-1 c with L = diag(lambda).
Vector perceived_costs(const GameSpec& game, const WelfareWeights& lambda,
                       const Matrix& g_effective);

/// Interior efficient targets q^lambda: b_i'(q_i) = perceived cost i.
Vector pareto_target(const GameSpec& game, const WelfareWeights& lambda);

/// Copy of g with every edge leaving a coalition zeroed.
DependenceMatrix coalition_modified_matrix(const DependenceMatrix& g,
                                           const CoalitionPartition& partition);

/// Interior semi-cooperative targets: pareto_target with the
/// coalition-modified matrix in the cost correction.
Vector semicoop_target(const GameSpec& game, const CoalitionPartition& partition,
                       const WelfareWeights& lambda);

/// First-order-condition residual of the weighted welfare problem at x.
/// Zero (within tolerance) exactly at interior efficient profiles.
Vector pareto_foc_residual(const GameSpec& game, const WelfareWeights& lambda,
                           const Vector& x);

/// FOC residual for coalition play: externality correction restricted to
/// coalition-internal influences, aggregates still on the full network.
Vector semicoop_foc_residual(const GameSpec& game, const CoalitionPartition& partition,
                             const WelfareWeights& lambda, const Vector& x);

}  // namespace netgood
