#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace netgood {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    Matrix transposed() const;

    /// Largest absolute entry; 0 for an empty matrix.
    double max_abs() const;
    /// Induced infinity norm (maximum absolute row sum).
    double inf_norm() const;

    bool all_finite() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

/// A + alpha * B
Matrix add_scaled(const Matrix& a, double alpha, const Matrix& b);

double inf_norm(const Vector& v);
double inf_dist(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);

/// LU factorization with partial pivoting, PA = LU.
///
/// `singular` is set when elimination meets an exactly unusable pivot; for
/// near-singular systems consult rcond_estimate() before trusting solve().
struct LuFactorization {
    Matrix lu;
    std::vector<int> perm;
    double perm_sign = 1.0;
    bool singular = false;

    double determinant() const;
    Vector solve(const Vector& b) const;

    /// Crude reciprocal condition estimate from the pivot spread.
    double rcond_estimate() const;
};

LuFactorization lu_factor(Matrix a);

/// Solve a x = b; throws SingularSystem when the factorization's reciprocal
/// condition estimate falls below `rcond_floor`.
Vector solve_linear(const Matrix& a, const Vector& b, double rcond_floor = 1e-12);

/// Determinant of the principal minor of `a` selected by `index_set`.
double principal_minor_det(const Matrix& a, const std::vector<int>& index_set);

}  // namespace netgood
