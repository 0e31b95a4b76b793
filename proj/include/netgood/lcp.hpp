#pragma once

#include <optional>
#include <vector>

#include "netgood/linalg.hpp"

namespace netgood {

/// LCP(M, q): find x >= 0 and w = M x + q >= 0 with x'w = 0.
struct LCPInstance {
    Matrix m;
    Vector q;

    int size() const { return m.rows(); }
};

LCPInstance make_lcp(Matrix m, Vector q);

struct LCPSolution {
    Vector x;
    Vector w;
    std::vector<int> support;  // indices with x_i above tolerance
};

/// Outcome of complementary pivoting. Ray termination is a legitimate
/// verdict ("this path found no solution"), not a failure.
struct LemkeResult {
    enum class Status { Solved, RayTermination };
    Status status = Status::RayTermination;
    std::optional<LCPSolution> solution;
    int pivots = 0;

    bool solved() const { return status == Status::Solved; }
};

/// Lemke's complementary pivoting with the all-ones covering vector and a
/// lexicographic ratio test. Throws CycleDetected past 10 * 2^n pivots.
LemkeResult lemke_solve(const LCPInstance& inst, double tol = 1e-9);

struct EnumerationResult {
    std::vector<LCPSolution> solutions;  // lexicographically sorted by x
    int singular_supports = 0;           // supports skipped as unsolvable
};

/// Exhaustive support enumeration: the ground-truth oracle for small n.
/// Throws DimensionTooLarge above `cap`.
EnumerationResult enumerate_solutions(const LCPInstance& inst, double tol = 1e-9,
                                      int cap = 20);

/// Check feasibility, nonnegativity, and complementarity at tolerance `tol`.
bool verify_solution(const LCPInstance& inst, const LCPSolution& sol, double tol = 1e-9);

/// Support recomputed from x at tolerance `tol`.
std::vector<int> support_of(const Vector& x, double tol);

}  // namespace netgood
