#pragma once

#include "netgood/game_model.hpp"
#include "netgood/linalg.hpp"

namespace netgood {

/// A centrality vector together with how it was obtained: closed-form
/// resolvent solve, or a truncated series with its tail estimate.
struct CentralityResult {
    enum class Measure { Alpha, Katz, Bonacich };
    enum class Convergence { Closed, SeriesTruncated };

    Vector values;
    Measure measure = Measure::Alpha;
    Convergence convergence = Convergence::Closed;
    double alpha = 0.0;
    double beta = 0.0;      // Bonacich only
    int depth = 0;          // Katz only
    double residual = 0.0;  // Katz tail estimate ||alpha^d G^d e||_inf
};

/// (I - alpha G)^-1 e by direct LU solve. Throws SingularSystem when 1/alpha
/// is (numerically) an eigenvalue of G. Never evaluated through the series:
/// the resolvent can exist where the series diverges.
CentralityResult alpha_centrality(const Matrix& g, double alpha, const Vector& e);

/// Truncated series  sum_{k=1..depth} alpha^k G^k e. Divergence is reported
/// through the residual, never prevented.
CentralityResult katz_centrality(const Matrix& g, double alpha, const Vector& e, int depth);

/// beta * (I - alpha R)^-1 R 1  for a zero-diagonal relationship matrix R.
CentralityResult bonacich_centrality(const Matrix& r, double alpha, double beta);

/// Check  c_alpha(A, alpha, 1) = 1 + alpha * c_bonacich(A, alpha, 1)
///                             = 1 + c_katz_closed(A, alpha)
/// for symmetric zero-diagonal A with |alpha| < 1/spectral_radius(A).
bool verify_measure_identity(const Matrix& a, double alpha, double tol = 1e-9);

/// Verify an interior profile against its resolvent characterization:
/// x must equal (I+G)^-1 target, where the target is rebuilt from the
/// profile's outcome kind (standalone, efficient, or coalition targets).
/// Throws NotInterior when the profile carries positive slack.
bool centrality_effort_check(const GameSpec& game, const EffortProfile& profile,
                             double tol = 1e-8);

}  // namespace netgood
