#include "netgood/lcp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "netgood/errors.hpp"

namespace netgood {

LCPInstance make_lcp(Matrix m, Vector q) {
    if (!m.is_square()) throw ValidationError("LCP matrix must be square");
    if (m.rows() != static_cast<int>(q.size()))
        throw ValidationError("LCP dimensions disagree");
    if (!m.all_finite()) throw ValidationError("LCP matrix has non-finite entries");
    for (double v : q)
        if (!std::isfinite(v)) throw ValidationError("LCP vector has non-finite entries");
    return LCPInstance{std::move(m), std::move(q)};
}

std::vector<int> support_of(const Vector& x, double tol) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        if (x[i] > tol) s.push_back(i);
    return s;
}

bool verify_solution(const LCPInstance& inst, const LCPSolution& sol, double tol) {
    const int n = inst.size();
    if (static_cast<int>(sol.x.size()) != n || static_cast<int>(sol.w.size()) != n)
        return false;
    const Vector mx = inst.m * sol.x;
    double feas = 0.0, xw = 0.0, xmin = 0.0, wmin = 0.0;
    for (int i = 0; i < n; ++i) {
        feas = std::max(feas, std::abs(sol.w[i] - (mx[i] + inst.q[i])));
        xw += sol.x[i] * sol.w[i];
        xmin = std::min(xmin, sol.x[i]);
        wmin = std::min(wmin, sol.w[i]);
    }
    return feas <= tol && xmin >= -tol && wmin >= -tol && std::abs(xw) <= tol * n;
}

namespace {

// Lexicographic comparison of ratio rows (rhs, then the columns that started
// as the identity), used to break degenerate ratio-test ties deterministically.
bool lex_less(const Matrix& t, int row_a, int row_b, double piv_a, double piv_b, int n) {
    const int rhs = t.cols() - 1;
    const double ra = t(row_a, rhs) / piv_a;
    const double rb = t(row_b, rhs) / piv_b;
    if (ra < rb - 1e-14) return true;
    if (rb < ra - 1e-14) return false;
    for (int j = 0; j < n; ++j) {
        const double va = t(row_a, j) / piv_a;
        const double vb = t(row_b, j) / piv_b;
        if (va < vb - 1e-14) return true;
        if (vb < va - 1e-14) return false;
    }
    return false;
}

void pivot(Matrix& t, int row, int col) {
    const int cols = t.cols();
    const double p = t(row, col);
    for (int j = 0; j < cols; ++j) t(row, j) /= p;
    for (int i = 0; i < t.rows(); ++i) {
        if (i == row) continue;
        const double f = t(i, col);
        if (f == 0.0) continue;
        for (int j = 0; j < cols; ++j) t(i, j) -= f * t(row, j);
    }
}

}  // namespace

LemkeResult lemke_solve(const LCPInstance& inst, double tol) {
    const int n = inst.size();
    LemkeResult result;

    // Trivial solution when q is already nonnegative.
    bool q_nonneg = true;
    for (double v : inst.q)
        if (v < 0.0) q_nonneg = false;
    if (q_nonneg) {
        LCPSolution sol;
        sol.x.assign(n, 0.0);
        sol.w = inst.q;
        sol.support = {};
        result.status = LemkeResult::Status::Solved;
        result.solution = std::move(sol);
        return result;
    }

    // Tableau for  w - M x - z0*1 = q.
    // Columns: w_0..w_{n-1}, x_0..x_{n-1}, z0, rhs.
    const int col_z0 = 2 * n;
    const int col_rhs = 2 * n + 1;
    Matrix t(n, 2 * n + 2);
    for (int i = 0; i < n; ++i) {
        t(i, i) = 1.0;
        for (int j = 0; j < n; ++j) t(i, n + j) = -inst.m(i, j);
        t(i, col_z0) = -1.0;
        t(i, col_rhs) = inst.q[i];
    }
    std::vector<int> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = i;

    // Bring z0 into the basis on the row with the most negative rhs
    // (lexicographic tie-break; all candidate pivots equal -1).
    int r = 0;
    for (int i = 1; i < n; ++i) {
        if (t(i, col_rhs) < t(r, col_rhs) - 1e-14)
            r = i;
        else if (t(i, col_rhs) < t(r, col_rhs) + 1e-14 && lex_less(t, i, r, 1.0, 1.0, n))
            r = i;
    }
    pivot(t, r, col_z0);
    int entering = n + basis[r];  // the complement x_r of the leaving w_r
    basis[r] = col_z0;
    result.pivots = 1;

    // Pivot admissibility is a fixed scaled epsilon, independent of the
    // caller's solution tolerance; degenerate ties go to the lexicographic
    // rule rather than a threshold.
    const double pivot_eps = 1e-11 * std::max(1.0, inst.m.max_abs());
    const long long pivot_cap = 10LL * (1LL << std::min(n, 40));
    while (true) {
        // Ratio test over rows with positive entries in the entering column.
        int leave = -1;
        for (int i = 0; i < n; ++i) {
            const double p = t(i, entering);
            if (p <= pivot_eps) continue;
            if (leave < 0 || lex_less(t, i, leave, p, t(leave, entering), n)) leave = i;
        }
        if (leave < 0) {
            result.status = LemkeResult::Status::RayTermination;
            return result;
        }

        const int leaving_var = basis[leave];
        pivot(t, leave, entering);
        basis[leave] = entering;
        if (++result.pivots > pivot_cap)
            throw CycleDetected("complementary pivoting exceeded its pivot cap");

        if (leaving_var == col_z0) break;  // z0 left the basis: solution found
        entering = leaving_var < n ? leaving_var + n : leaving_var - n;
    }

    LCPSolution sol;
    sol.x.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (basis[i] >= n && basis[i] < 2 * n) sol.x[basis[i] - n] = t(i, col_rhs);
    for (double& v : sol.x)
        if (v < 0.0 && v >= -tol) v = 0.0;
    sol.w = inst.m * sol.x;
    for (int i = 0; i < n; ++i) sol.w[i] += inst.q[i];
    sol.support = support_of(sol.x, tol);
    result.status = LemkeResult::Status::Solved;
    result.solution = std::move(sol);
    return result;
}

EnumerationResult enumerate_solutions(const LCPInstance& inst, double tol, int cap) {
    const int n = inst.size();
    if (n > cap) throw DimensionTooLarge(n, cap);

    EnumerationResult out;

    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<int> sup;
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) sup.push_back(i);
        const int k = static_cast<int>(sup.size());

        Vector x(n, 0.0);
        if (k > 0) {
            Matrix sub(k, k);
            Vector rhs(k);
            for (int a = 0; a < k; ++a) {
                for (int b = 0; b < k; ++b) sub(a, b) = inst.m(sup[a], sup[b]);
                rhs[a] = -inst.q[sup[a]];
            }
            LuFactorization f = lu_factor(std::move(sub));
            if (f.singular || f.rcond_estimate() < 1e-13) {
                ++out.singular_supports;
                continue;
            }
            const Vector xs = f.solve(rhs);
            bool ok = true;
            for (double v : xs)
                if (v < -tol) ok = false;
            if (!ok) continue;
            for (int a = 0; a < k; ++a) x[sup[a]] = std::max(xs[a], 0.0);
        }

        Vector w = inst.m * x;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            w[i] += inst.q[i];
            if (!(mask & (1ULL << i)) && w[i] < -tol) ok = false;
        }
        if (!ok) continue;

        LCPSolution sol;
        sol.support = support_of(x, tol);
        sol.x = std::move(x);
        sol.w = std::move(w);
        out.solutions.push_back(std::move(sol));
    }

    // Distinct supports can land on the same point; deduplicate, then order.
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const LCPSolution& a, const LCPSolution& b) {
                  return std::lexicographical_compare(a.x.begin(), a.x.end(),
                                                      b.x.begin(), b.x.end());
              });
    const double dedup = 1e-7;
    std::vector<LCPSolution> unique;
    for (auto& s : out.solutions) {
        bool dup = false;
        for (const auto& u : unique)
            if (inf_dist(s.x, u.x) <= dedup) dup = true;
        if (!dup) unique.push_back(std::move(s));
    }
    out.solutions = std::move(unique);
    for (auto& s : out.solutions) s.support = support_of(s.x, tol);
    return out;
}

}  // namespace netgood
