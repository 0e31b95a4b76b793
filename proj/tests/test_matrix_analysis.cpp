#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "netgood/errors.hpp"
#include "netgood/game_model.hpp"
#include "netgood/matrix_analysis.hpp"

using namespace netgood;

namespace {

Matrix symmetric_zero_diag(std::mt19937& rng, int n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Matrix g(n, n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) g(i, j) = g(j, i) = dist(rng);
    return g;
}

Matrix z_matrix_zero_diag(std::mt19937& rng, int n, double max_mag) {
    std::uniform_real_distribution<double> dist(-max_mag, 0.0);
    Matrix g(n, n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g(i, j) = dist(rng);
    return g;
}

Matrix plus_identity(const Matrix& g) {
    return add_scaled(Matrix::identity(g.rows()), 1.0, g);
}

}  // namespace

TEST_CASE("P-matrix test") {
    CHECK(is_p_matrix(Matrix::identity(2)));
    CHECK(is_p_matrix(Matrix::from_rows({{1, 0.5}, {0.5, 1}})));
    CHECK_FALSE(is_p_matrix(Matrix::from_rows({{1, 2}, {2, 1}})));  // det = -3
    CHECK_FALSE(is_p_matrix(Matrix::from_rows({{1, -2}, {-2, 1}})));
    CHECK_FALSE(is_p_matrix(Matrix(3, 3, 0.0)));
    CHECK_FALSE(is_p_matrix(Matrix::from_rows({{-1}})));
    CHECK(is_p_matrix(Matrix::from_rows({{0.3}})));

    SUBCASE("dimension cap") {
        CHECK_THROWS_AS(is_p_matrix(Matrix::identity(21)), DimensionTooLarge);
        CHECK_NOTHROW(is_p_matrix(Matrix::identity(12)));
    }

    SUBCASE("transpose has the same principal minors") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + trial % 4;
            Matrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = dist(rng) + (i == j ? 1.0 : 0.0);
            CHECK(is_p_matrix(m) == is_p_matrix(m.transposed()));
        }
    }
}

TEST_CASE("Z / L matrix tests") {
    CHECK(is_z_matrix(Matrix::identity(3)));
    CHECK(is_z_matrix(Matrix::from_rows({{1, -2}, {-2, 1}})));
    CHECK_FALSE(is_z_matrix(Matrix::from_rows({{1, 0.5}, {0.5, 1}})));

    CHECK(is_l_matrix(Matrix::identity(2)));
    CHECK_FALSE(is_l_matrix(Matrix::from_rows({{0, -1}, {-1, 0}})));  // zero diagonal
    CHECK(is_l_matrix(Matrix::from_rows({{1, -2}, {-2, 1}})));
}

TEST_CASE("S-matrix test") {
    CHECK(is_s_matrix(Matrix::identity(2)));
    CHECK(is_s_matrix(Matrix::from_rows({{1, -0.5}, {-0.5, 1}})));
    CHECK_FALSE(is_s_matrix(Matrix::from_rows({{1, -2}, {-2, 1}})));
    // nonnegative with positive row content is trivially S
    CHECK(is_s_matrix(Matrix::from_rows({{1, 2}, {2, 1}})));
}

TEST_CASE("strict diagonal dominance") {
    CHECK(is_strictly_diagonally_dominant(Matrix::identity(4)));
    CHECK(is_strictly_diagonally_dominant(Matrix::from_rows({{1, 0.5}, {0.5, 1}})));
    CHECK_FALSE(is_strictly_diagonally_dominant(Matrix::from_rows({{1, 2}, {2, 1}})));
}

TEST_CASE("spectral radius and minimum real eigenvalue") {
    CHECK(spectral_radius(Matrix::from_rows({{0, 0.5}, {0.5, 0}})) ==
          doctest::Approx(0.5));
    CHECK(spectral_radius(Matrix::from_rows({{0, 2}, {2, 0}})) == doctest::Approx(2.0));
    CHECK(spectral_radius(Matrix(3, 3, 0.0)) == doctest::Approx(0.0));

    auto m1 = min_real_eigenvalue(Matrix::from_rows({{0, 0.5}, {0.5, 0}}));
    REQUIRE(m1.has_value());
    CHECK(*m1 == doctest::Approx(-0.5));

    auto m2 = min_real_eigenvalue(Matrix::from_rows({{0, -2}, {-2, 0}}));
    REQUIRE(m2.has_value());
    CHECK(*m2 == doctest::Approx(-2.0));

    CHECK_FALSE(min_real_eigenvalue(Matrix::from_rows({{0, 1}, {-1, 0}})).has_value());
}

TEST_CASE("symmetric cross-check: P(I+G) iff least eigenvalue above -1") {
    // Zero-diagonal symmetric G has trace zero, so its least eigenvalue is
    // nonpositive and the two uniqueness conditions coincide.
    std::mt19937 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 220; ++trial) {
        const int n = 2 + trial % 7;
        const Matrix g = symmetric_zero_diag(rng, n, -2.0, 2.0);
        const auto lmin = min_real_eigenvalue(g);
        REQUIRE(lmin.has_value());
        CHECK(*lmin <= 1e-9);
        if (std::abs(*lmin + 1.0) < 1e-7) continue;  // skip razor-edge draws
        const bool p = is_p_matrix(plus_identity(g));
        CHECK(p == (*lmin > -1.0));
        CHECK(p == (std::abs(*lmin) < 1.0));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("Z-matrix cross-check: P iff S iff spectral radius below one") {
    std::mt19937 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 230; ++trial) {
        const int n = 2 + trial % 6;
        // Mix magnitudes so both verdicts appear.
        const Matrix g = z_matrix_zero_diag(rng, n, trial % 2 ? 0.4 : 1.2);
        const double rho = spectral_radius(g);
        if (std::abs(rho - 1.0) < 1e-7) continue;
        const Matrix ig = plus_identity(g);
        const bool p = is_p_matrix(ig);
        const bool s = is_s_matrix(ig);
        const auto lmin = min_real_eigenvalue(g);
        REQUIRE(lmin.has_value());
        CHECK(p == s);
        CHECK(p == (rho < 1.0));
        CHECK(p == (std::abs(*lmin) < 1.0));
        // Perron direction: the least real eigenvalue of a zero-diagonal
        // Z-matrix is -rho.
        CHECK(*lmin == doctest::Approx(-rho).epsilon(1e-8));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("diagonal dominance implies P; converse fails") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 5;
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = dist(rng) + (i == j ? 0.6 : 0.0);
        if (!is_strictly_diagonally_dominant(m)) continue;
        bool positive_diag = true;
        for (int i = 0; i < n; ++i)
            if (m(i, i) <= 0.0) positive_diag = false;
        if (!positive_diag) continue;
        CHECK(is_p_matrix(m));
    }

    // P without dominance: off-diagonal row sum above one, determinant positive.
    const Matrix witness = Matrix::from_rows({{1, 1.2}, {0.5, 1}});
    CHECK_FALSE(is_strictly_diagonally_dominant(witness));
    CHECK(is_p_matrix(witness));
}

TEST_CASE("spectral radius is sign-flip invariant") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 5;
        Matrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = dist(rng);
        Matrix neg(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) neg(i, j) = -g(i, j);
        CHECK(spectral_radius(g) == doctest::Approx(spectral_radius(neg)).epsilon(1e-9));
    }
}

TEST_CASE("classify: full dependence-matrix verdicts") {
    SUBCASE("substitutes, unique") {
        const auto g =
            DependenceMatrix::from_matrix(Matrix::from_rows({{0, 0.5}, {0.5, 0}}));
        const auto r = classify(g);
        CHECK(r.is_p);
        CHECK_FALSE(r.is_z);
        CHECK(r.is_s);
        CHECK(r.is_sdd);
        CHECK(r.uniqueness_verdict == UniquenessVerdict::Unique);
        CHECK(r.existence_verdict == ExistenceVerdict::Always);
        CHECK(r.spectral_radius == doctest::Approx(0.5));
    }
    SUBCASE("strong complements, nonexistence regime") {
        const auto g = DependenceMatrix::from_matrix(Matrix::from_rows({{0, -2}, {-2, 0}}));
        const auto r = classify(g);
        CHECK_FALSE(r.is_p);
        CHECK(r.is_z);
        CHECK(r.is_l);
        CHECK_FALSE(r.is_s);
        CHECK(r.uniqueness_verdict == UniquenessVerdict::NotUnique);
        CHECK(r.existence_verdict == ExistenceVerdict::IffSpectralRadiusLtOne);
        CHECK(r.spectral_radius == doctest::Approx(2.0));
        REQUIRE(r.min_real_eigenvalue.has_value());
        CHECK(*r.min_real_eigenvalue == doctest::Approx(-2.0));
    }
    SUBCASE("empty network") {
        const auto r = classify(DependenceMatrix::zero(3));
        CHECK(r.is_p);
        CHECK(r.uniqueness_verdict == UniquenessVerdict::Unique);
        CHECK(r.existence_verdict == ExistenceVerdict::Always);
        CHECK(r.spectral_radius == doctest::Approx(0.0));
    }
    SUBCASE("strong substitutes: multiple equilibria but guaranteed existence") {
        const auto g = DependenceMatrix::from_matrix(Matrix::from_rows({{0, 2}, {2, 0}}));
        const auto r = classify(g);
        CHECK_FALSE(r.is_p);
        CHECK(r.uniqueness_verdict == UniquenessVerdict::NotUnique);
        CHECK(r.existence_verdict == ExistenceVerdict::Always);
        CHECK(r.spectral_radius == doctest::Approx(2.0));
    }
    SUBCASE("mixed signs, P: existence for every target") {
        const auto g =
            DependenceMatrix::from_matrix(Matrix::from_rows({{0, -0.3}, {0.2, 0}}));
        const auto r = classify(g);
        CHECK(r.is_p);
        CHECK_FALSE(r.is_z);
        CHECK(r.existence_verdict == ExistenceVerdict::Always);
    }
    SUBCASE("mixed signs, not P: inconclusive") {
        // 2x2 mixed-sign games are always P (g12*g21 < 0 < 1); a failing
        // principal minor needs three agents.
        const auto g = DependenceMatrix::from_matrix(
            Matrix::from_rows({{0, 2, -0.5}, {2, 0, 0}, {0.1, 0, 0}}));
        const auto r = classify(g);
        CHECK_FALSE(r.is_p);
        CHECK_FALSE(r.is_z);
        CHECK(r.existence_verdict == ExistenceVerdict::Inconclusive);
    }
}
