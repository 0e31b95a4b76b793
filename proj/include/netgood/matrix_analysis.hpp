#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netgood/linalg.hpp"

namespace netgood {

struct DependenceMatrix;  // game_model.hpp

enum class UniquenessVerdict { Unique, NotUnique };
enum class ExistenceVerdict { Always, IffSpectralRadiusLtOne, Inconclusive };

/// Matrix-class flags and spectral quantities backing the solver's
/// existence/uniqueness verdicts. Class flags P/S/SDD describe I+G and
/// Z/L describe the off-diagonal sign pattern shared by G and I+G.
struct ClassificationReport {
    bool is_p = false;
    bool is_z = false;
    bool is_l = false;
    bool is_s = false;
    bool is_sdd = false;
    double spectral_radius = 0.0;
    std::optional<double> min_real_eigenvalue;
    UniquenessVerdict uniqueness_verdict = UniquenessVerdict::NotUnique;
    ExistenceVerdict existence_verdict = ExistenceVerdict::Inconclusive;
    std::vector<std::string> citations;
};

inline constexpr int kPMatrixEnumerationCap = 20;

/// Exact P-matrix test: every principal minor determinant must exceed
/// tol * scale^order, scale being the largest absolute entry. Exponential
/// in n; throws DimensionTooLarge above `cap`.
bool is_p_matrix(const Matrix& m, double tol = 1e-9, int cap = kPMatrixEnumerationCap);

/// Off-diagonal entries all nonpositive.
bool is_z_matrix(const Matrix& m);

/// Z-matrix with strictly positive diagonal.
bool is_l_matrix(const Matrix& m);

/// Some x > 0 has M x > 0, decided by LP feasibility of
/// { x >= 1 : M x >= 1 } (equivalent under positive scaling).
bool is_s_matrix(const Matrix& m, double tol = 1e-9);

/// |m_ii| strictly dominates the absolute off-diagonal row sum, every row.
bool is_strictly_diagonally_dominant(const Matrix& m);

/// Largest eigenvalue modulus via full dense eigen-decomposition.
double spectral_radius(const Matrix& m, double tol = 1e-9);

/// Smallest real eigenvalue; empty when the spectrum has no real member.
/// "Real" means |Im| <= 1e-8 * (1 + inf-norm of m).
std::optional<double> min_real_eigenvalue(const Matrix& m, double tol = 1e-9);

/// Full classification of a dependence matrix: flags on I+G and G plus
/// the equilibrium existence/uniqueness verdicts they imply.
ClassificationReport classify(const DependenceMatrix& g, double tol = 1e-9,
                              int cap = kPMatrixEnumerationCap);

const char* to_string(UniquenessVerdict v);
const char* to_string(ExistenceVerdict v);

}  // namespace netgood
