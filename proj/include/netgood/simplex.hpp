#pragma once

#include "netgood/linalg.hpp"

namespace netgood {

/// Decide whether { z >= 0 : A z = b } is nonempty.
///
/// Phase-1 simplex over a full artificial basis, entering and leaving
/// variables chosen by Bland's rule, so the pivot sequence is finite and
/// deterministic. Feasible means the artificial objective can be driven
/// below `tol` (scaled by the magnitude of b).
bool lp_equality_feasible(const Matrix& a, const Vector& b, double tol = 1e-9);

/// Decide whether { x >= lower : A x >= rhs } is nonempty, via slack and
/// shift variables fed to lp_equality_feasible.
bool lp_inequality_feasible(const Matrix& a, const Vector& rhs, const Vector& lower,
                            double tol = 1e-9);

}  // namespace netgood
