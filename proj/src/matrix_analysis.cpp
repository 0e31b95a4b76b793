#include "netgood/matrix_analysis.hpp"

#include <cassert>
#include <cmath>

#include "netgood/eigen.hpp"
#include "netgood/errors.hpp"
#include "netgood/game_model.hpp"
#include "netgood/simplex.hpp"

namespace netgood {

bool is_p_matrix(const Matrix& m, double tol, int cap) {
    assert(m.is_square());
    const int n = m.rows();
    if (n > cap) throw DimensionTooLarge(n, cap);

    const double scale = m.max_abs();
    std::vector<int> idx;
    idx.reserve(n);
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
        idx.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) idx.push_back(i);
        const double det = principal_minor_det(m, idx);
        const double threshold = tol * std::pow(scale, static_cast<double>(idx.size()));
        if (!(det > threshold)) return false;
    }
    return true;
}

bool is_z_matrix(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) > 0.0) return false;
    return true;
}

bool is_l_matrix(const Matrix& m) {
    if (!is_z_matrix(m)) return false;
    for (int i = 0; i < m.rows(); ++i)
        if (!(m(i, i) > 0.0)) return false;
    return true;
}

bool is_s_matrix(const Matrix& m, double tol) {
    const int n = m.rows();
    Vector ones(n, 1.0);
    return lp_inequality_feasible(m, ones, ones, tol);
}

bool is_strictly_diagonally_dominant(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        double off = 0.0;
        for (int j = 0; j < m.cols(); ++j)
            if (j != i) off += std::abs(m(i, j));
        if (!(std::abs(m(i, i)) > off)) return false;
    }
    return true;
}

double spectral_radius(const Matrix& m, double tol) {
    const Eigenvalues ev = dense_eigenvalues(m);
    (void)tol;  // iteration converges to machine precision; tol kept for interface parity
    double rho = 0.0;
    for (size_t i = 0; i < ev.re.size(); ++i)
        rho = std::max(rho, std::hypot(ev.re[i], ev.im[i]));
    return rho;
}

std::optional<double> min_real_eigenvalue(const Matrix& m, double tol) {
    (void)tol;
    const Eigenvalues ev = dense_eigenvalues(m);
    const double real_cut = 1e-8 * (1.0 + m.inf_norm());
    std::optional<double> lo;
    for (size_t i = 0; i < ev.re.size(); ++i) {
        if (std::abs(ev.im[i]) > real_cut) continue;
        if (!lo || ev.re[i] < *lo) lo = ev.re[i];
    }
    return lo;
}

ClassificationReport classify(const DependenceMatrix& g, double tol, int cap) {
    const Matrix& gm = g.weights();
    const Matrix ig = add_scaled(Matrix::identity(g.size()), 1.0, gm);

    ClassificationReport r;
    r.is_p = is_p_matrix(ig, tol, cap);
    r.is_z = is_z_matrix(gm);
    r.is_l = is_l_matrix(ig);
    r.is_s = is_s_matrix(ig, tol);
    r.is_sdd = is_strictly_diagonally_dominant(ig);
    r.spectral_radius = spectral_radius(gm, tol);
    r.min_real_eigenvalue = min_real_eigenvalue(gm, tol);

    r.uniqueness_verdict = r.is_p ? UniquenessVerdict::Unique : UniquenessVerdict::NotUnique;
    r.citations.push_back("uniqueness iff I+G is a P-matrix");

    bool nonnegative = true;
    for (int i = 0; i < gm.rows(); ++i)
        for (int j = 0; j < gm.cols(); ++j)
            if (gm(i, j) < 0.0) nonnegative = false;

    if (nonnegative) {
        r.existence_verdict = ExistenceVerdict::Always;
        r.citations.push_back("substitutes: nonnegative dependence guarantees existence");
    } else if (r.is_z) {
        r.existence_verdict = ExistenceVerdict::IffSpectralRadiusLtOne;
        r.citations.push_back("complements: existence iff spectral_radius(G) < 1");
        r.citations.push_back("Z-matrix: unique iff |min real eigenvalue(G)| < 1");
    } else if (r.is_p) {
        r.existence_verdict = ExistenceVerdict::Always;
        r.citations.push_back("P-matrix: solution exists and is unique for every target");
    } else {
        r.existence_verdict = ExistenceVerdict::Inconclusive;
        r.citations.push_back("mixed signs outside the characterized classes");
    }
    bool symmetric = true;
    for (int i = 0; i < gm.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (gm(i, j) != gm(j, i)) symmetric = false;
    if (symmetric && gm.rows() > 1)
        r.citations.push_back("symmetric: unique iff |min real eigenvalue(G)| < 1");
    if (r.is_sdd)
        r.citations.push_back("strict diagonal dominance of I+G implies the P-matrix property");
    return r;
}

const char* to_string(UniquenessVerdict v) {
    return v == UniquenessVerdict::Unique ? "unique" : "not_unique";
}

const char* to_string(ExistenceVerdict v) {
    switch (v) {
        case ExistenceVerdict::Always: return "always";
        case ExistenceVerdict::IffSpectralRadiusLtOne: return "iff_spectral_radius_lt_1";
        default: return "inconclusive";
    }
}

}  // namespace netgood
