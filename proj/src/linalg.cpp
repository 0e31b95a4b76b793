#include "netgood/linalg.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "netgood/errors.hpp"

namespace netgood {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("ragged initializer for Matrix");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) { return add_scaled(a, 1.0, b); }

Matrix add_scaled(const Matrix& a, double alpha, const Matrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + alpha * b(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
    assert(a.cols() == static_cast<int>(x.size()));
    Vector r(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

double inf_norm(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double inf_dist(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

Vector sub(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LuFactorization lu_factor(Matrix a) {
    assert(a.is_square());
    const int n = a.rows();
    LuFactorization f;
    f.perm.resize(n);
    for (int i = 0; i < n; ++i) f.perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(f.perm[col], f.perm[pivot]);
            f.perm_sign = -f.perm_sign;
        }
        const double d = a(col, col);
        if (d == 0.0) {
            f.singular = true;
            continue;
        }
        for (int r = col + 1; r < n; ++r) {
            const double m = a(r, col) / d;
            a(r, col) = m;
            if (m == 0.0) continue;
            for (int j = col + 1; j < n; ++j) a(r, j) -= m * a(col, j);
        }
    }
    f.lu = std::move(a);
    return f;
}

double LuFactorization::determinant() const {
    if (singular) return 0.0;
    double d = perm_sign;
    for (int i = 0; i < lu.rows(); ++i) d *= lu(i, i);
    return d;
}

double LuFactorization::rcond_estimate() const {
    if (singular) return 0.0;
    double lo = std::abs(lu(0, 0));
    double hi = lo;
    for (int i = 1; i < lu.rows(); ++i) {
        const double v = std::abs(lu(i, i));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi == 0.0 ? 0.0 : lo / hi;
}

Vector LuFactorization::solve(const Vector& b) const {
    const int n = lu.rows();
    assert(static_cast<int>(b.size()) == n);
    if (singular) throw SingularSystem("solve on a singular factorization");
    Vector y(n);
    for (int i = 0; i < n; ++i) {
        double s = b[perm[i]];
        for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
        y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < n; ++j) s -= lu(i, j) * y[j];
        y[i] = s / lu(i, i);
    }
    return y;
}

Vector solve_linear(const Matrix& a, const Vector& b, double rcond_floor) {
    LuFactorization f = lu_factor(a);
    if (f.singular || f.rcond_estimate() < rcond_floor)
        throw SingularSystem("linear system is numerically singular");
    return f.solve(b);
}

double principal_minor_det(const Matrix& a, const std::vector<int>& index_set) {
    const int k = static_cast<int>(index_set.size());
    Matrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = a(index_set[i], index_set[j]);
    return lu_factor(std::move(sub)).determinant();
}

}  // namespace netgood
