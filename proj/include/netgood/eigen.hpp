#pragma once

#include "netgood/linalg.hpp"

namespace netgood {

/// Eigenvalues of a real dense matrix; complex values appear as
/// conjugate pairs in adjacent slots.
struct Eigenvalues {
    Vector re;
    Vector im;
};

/// Full eigenvalue computation: orthogonal similarity reduction to upper
/// Hessenberg form followed by implicit double-shift QR iteration.
///
/// `max_sweeps` caps the total number of QR sweeps; exceeding it raises
/// ConvergenceFailure. Pass 0 to use the default of 100 * n.
Eigenvalues dense_eigenvalues(const Matrix& a, int max_sweeps = 0);

}  // namespace netgood
