#include "netgood/eigen.hpp"

#include <cassert>
#include <cmath>

#include "netgood/errors.hpp"

// Classic dense nonsymmetric eigenvalue path (EISPACK orthes/hqr lineage):
// Householder reduction to upper Hessenberg form, then Francis double-shift
// QR with exceptional shifts. Eigenvectors are never needed here, so only
// the eigenvalue recurrence is kept.

namespace netgood {
namespace {

void hessenberg_reduce(Matrix& h) {
    const int n = h.rows();
    const int low = 0;
    const int high = n - 1;
    Vector ort(n, 0.0);

    for (int m = low + 1; m <= high - 1; ++m) {
        double scale = 0.0;
        for (int i = m; i <= high; ++i) scale += std::abs(h(i, m - 1));
        if (scale == 0.0) continue;

        double hh = 0.0;
        for (int i = high; i >= m; --i) {
            ort[i] = h(i, m - 1) / scale;
            hh += ort[i] * ort[i];
        }
        double g = std::sqrt(hh);
        if (ort[m] > 0) g = -g;
        hh -= ort[m] * g;
        ort[m] -= g;

        // Apply Householder similarity transform  H <- P H P
        for (int j = m; j < n; ++j) {
            double f = 0.0;
            for (int i = high; i >= m; --i) f += ort[i] * h(i, j);
            f /= hh;
            for (int i = m; i <= high; ++i) h(i, j) -= f * ort[i];
        }
        for (int i = 0; i <= high; ++i) {
            double f = 0.0;
            for (int j = high; j >= m; --j) f += ort[j] * h(i, j);
            f /= hh;
            for (int j = m; j <= high; ++j) h(i, j) -= f * ort[j];
        }
        h(m, m - 1) = scale * g;
    }
    // Entries below the first subdiagonal are dead after the reduction.
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) h(i, j) = 0.0;
}

}  // namespace

Eigenvalues dense_eigenvalues(const Matrix& a, int max_sweeps) {
    assert(a.is_square());
    const int nn = a.rows();
    if (max_sweeps <= 0) max_sweeps = 100 * std::max(nn, 1);

    Eigenvalues out;
    out.re.assign(nn, 0.0);
    out.im.assign(nn, 0.0);
    if (nn == 0) return out;
    if (nn == 1) {
        out.re[0] = a(0, 0);
        return out;
    }

    Matrix h = a;
    hessenberg_reduce(h);

    Vector& d = out.re;
    Vector& e = out.im;

    const int low = 0;
    const int high = nn - 1;
    const double eps = std::pow(2.0, -52.0);
    double exshift = 0.0;
    double p = 0, q = 0, r = 0, s = 0, z = 0, w, x, y;

    double norm = 0.0;
    for (int i = 0; i < nn; ++i)
        for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::abs(h(i, j));
    if (norm == 0.0) return out;  // zero matrix: all eigenvalues are zero

    int n = high;
    int iter = 0;
    int sweeps = 0;
    while (n >= low) {
        // Look for a single small subdiagonal element.
        int l = n;
        while (l > low) {
            s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = norm;
            if (std::abs(h(l, l - 1)) < eps * s) break;
            --l;
        }

        if (l == n) {
            // One root found.
            h(n, n) += exshift;
            d[n] = h(n, n);
            e[n] = 0.0;
            --n;
            iter = 0;
        } else if (l == n - 1) {
            // Two roots found.
            w = h(n, n - 1) * h(n - 1, n);
            p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
            q = p * p + w;
            z = std::sqrt(std::abs(q));
            h(n, n) += exshift;
            h(n - 1, n - 1) += exshift;
            x = h(n, n);
            if (q >= 0) {
                // Real pair.
                z = (p >= 0) ? p + z : p - z;
                d[n - 1] = x + z;
                d[n] = d[n - 1];
                if (z != 0.0) d[n] = x - w / z;
                e[n - 1] = 0.0;
                e[n] = 0.0;
            } else {
                // Complex conjugate pair.
                d[n - 1] = x + p;
                d[n] = x + p;
                e[n - 1] = z;
                e[n] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // No convergence yet: run one double-shift QR sweep.
            x = h(n, n);
            y = 0.0;
            w = 0.0;
            if (l < n) {
                y = h(n - 1, n - 1);
                w = h(n, n - 1) * h(n - 1, n);
            }

            if (iter == 10 || iter == 20) {
                // Exceptional shift to break symmetric stalls.
                exshift += x;
                for (int i = low; i <= n; ++i) h(i, i) -= x;
                s = std::abs(h(n, n - 1)) + std::abs(h(n - 1, n - 2));
                x = y = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++iter;
            if (++sweeps > max_sweeps)
                throw ConvergenceFailure("eigenvalue iteration exceeded " +
                                         std::to_string(max_sweeps) + " sweeps");

            // Look for two consecutive small subdiagonal elements.
            int m = n - 2;
            while (m >= l) {
                z = h(m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - r - s;
                r = h(m + 2, m + 1);
                s = std::abs(p) + std::abs(q) + std::abs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                if (std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) <
                    eps * (std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                          std::abs(h(m + 1, m + 1)))))
                    break;
                --m;
            }
            for (int i = m + 2; i <= n; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // Double QR step on rows l..n, columns m..n.
            for (int k = m; k <= n - 1; ++k) {
                const bool notlast = (k != n - 1);
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x == 0.0) continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = std::sqrt(p * p + q * q + r * r);
                if (p < 0) s = -s;
                if (s == 0.0) continue;

                if (k != m)
                    h(k, k - 1) = -s * x;
                else if (l != m)
                    h(k, k - 1) = -h(k, k - 1);
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for (int j = k; j < nn; ++j) {
                    p = h(k, j) + q * h(k + 1, j);
                    if (notlast) {
                        p += r * h(k + 2, j);
                        h(k + 2, j) -= p * z;
                    }
                    h(k, j) -= p * x;
                    h(k + 1, j) -= p * y;
                }
                const int imax = std::min(n, k + 3);
                for (int i = 0; i <= imax; ++i) {
                    p = x * h(i, k) + y * h(i, k + 1);
                    if (notlast) {
                        p += z * h(i, k + 2);
                        h(i, k + 2) -= p * r;
                    }
                    h(i, k) -= p;
                    h(i, k + 1) -= p * q;
                }
            }
        }
    }
    return out;
}

}  // namespace netgood
