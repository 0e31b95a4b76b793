#include "netgood/simplex.hpp"

#include <cassert>
#include <cmath>

namespace netgood {

bool lp_equality_feasible(const Matrix& a, const Vector& b, double tol) {
    const int m = a.rows();
    const int n = a.cols();
    assert(static_cast<int>(b.size()) == m);

    const double scale = 1.0 + inf_norm(b);
    const double eps = tol * scale;

    // Tableau columns: n structural, m artificial, then the RHS.
    // Rows are sign-flipped so the RHS starts nonnegative and the
    // artificial basis is the identity.
    const int cols = n + m + 1;
    Matrix t(m, cols);
    for (int i = 0; i < m; ++i) {
        const double sgn = b[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) t(i, j) = sgn * a(i, j);
        t(i, n + i) = 1.0;
        t(i, cols - 1) = sgn * b[i];
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // Objective: minimize the sum of artificials. Maintain the reduced-cost
    // row z[j] = c_j - sum over rows of tableau entries with basic cost 1.
    Vector red(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += t(i, j);
        red[j] = (j >= n && j < n + m ? 1.0 : 0.0) - s;
    }

    const int max_pivots = 50 * (m + n + 4) * (m + n + 4);
    for (int iter = 0; iter < max_pivots; ++iter) {
        // Bland: lowest-index column with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (red[j] < -eps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        // Ratio test; Bland tie-break on the smallest basis variable index.
        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            const double pivot = t(i, enter);
            if (pivot <= eps) continue;
            const double ratio = t(i, cols - 1) / pivot;
            if (leave < 0 || ratio < best_ratio - 1e-15 ||
                (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) break;  // unbounded column; objective stays where it is

        const double pivot = t(leave, enter);
        for (int j = 0; j < cols; ++j) t(leave, j) /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = t(i, enter);
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j) t(i, j) -= f * t(leave, j);
        }
        const double fr = red[enter];
        if (fr != 0.0)
            for (int j = 0; j < cols; ++j) red[j] -= fr * t(leave, j);
        basis[leave] = enter;
    }

    double artificial_sum = 0.0;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n && basis[i] < n + m) artificial_sum += t(i, cols - 1);
    return artificial_sum <= eps * m;
}

bool lp_inequality_feasible(const Matrix& a, const Vector& rhs, const Vector& lower,
                            double tol) {
    const int m = a.rows();
    const int n = a.cols();
    assert(static_cast<int>(rhs.size()) == m);
    assert(static_cast<int>(lower.size()) == n);

    // Substitute x = lower + y with y >= 0 and add surplus variables:
    //   A y - s = rhs - A*lower.
    Matrix eq(m, n + m);
    Vector b(m);
    for (int i = 0; i < m; ++i) {
        double shift = 0.0;
        for (int j = 0; j < n; ++j) {
            eq(i, j) = a(i, j);
            shift += a(i, j) * lower[j];
        }
        eq(i, n + i) = -1.0;
        b[i] = rhs[i] - shift;
    }
    return lp_equality_feasible(eq, b, tol);
}

}  // namespace netgood
