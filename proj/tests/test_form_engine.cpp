#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Cholesky>

#include "loglap/closed_forms.hpp"
#include "loglap/form_engine.hpp"
#include "loglap/polynomials.hpp"
#include "loglap/rational.hpp"

using namespace loglap;

TEST_CASE("stiffness is symmetric PSD and kills constants") {
    Space shift = make_shift_space(2, 2.0, 3);
    BasisSet cyl = cylinder_basis(shift, 3);
    FormMatrices fm = assemble_form_matrix(shift, cyl);
    CHECK((fm.E - fm.E.transpose()).cwiseAbs().maxCoeff() <= 1e-12);

    Eigen::VectorXd ones = Eigen::VectorXd::Ones(fm.E.cols());
    CHECK((fm.E * ones).cwiseAbs().maxCoeff() <= 1e-12);

    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd v(fm.E.cols());
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
        CHECK(v.dot(fm.E * v) >= -1e-10);
    }
}

TEST_CASE("haar basis diagonalizes the shift form") {
    Space shift = make_shift_space(2, 2.0, 3);
    BasisSet haar = haar_basis(shift, 2);
    FormMatrices fm = assemble_form_matrix(shift, haar);
    // M = identity for the orthonormal wavelet basis
    CHECK((fm.M - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-8);
    std::vector<double> expected = {0, 1, 1.5, 1.5, 2, 2, 2, 2};
    for (int i = 0; i < 8; ++i) {
        CHECK(fm.E(i, i) == doctest::Approx(expected[static_cast<std::size_t>(i)])
                                .epsilon(1e-12));
        for (int j = 0; j < 8; ++j)
            if (i != j) CHECK(std::abs(fm.E(i, j)) <= 1e-12);
    }
}

TEST_CASE("legendre off-diagonals are pure quadrature error") {
    Space interval = make_interval_space(-1.0, 1.0, 200);
    BasisSet leg = legendre_basis(interval, 8);
    FormMatrices fm = assemble_form_matrix(interval, leg);
    double diag_scale = fm.E.diagonal().cwiseAbs().maxCoeff();
    double off = 0.0;
    for (Eigen::Index i = 0; i < fm.E.rows(); ++i)
        for (Eigen::Index j = 0; j < fm.E.cols(); ++j)
            if (i != j) off = std::max(off, std::abs(fm.E(i, j)));
    CHECK(off / diag_scale <= 1e-4);
}

TEST_CASE("solve_spectrum recovers the shift oracle") {
    Space shift = make_shift_space(2, 2.0, 4);
    FormMatrices fm = assemble_form_matrix(shift, cylinder_basis(shift, 4));
    SpectralModel model = solve_spectrum(fm);
    std::vector<double> lam = {0, 1, 1.5, 2, 2.5};
    std::vector<int> mult = {1, 1, 2, 4, 8};
    REQUIRE(model.eigenvalues.size() == lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        CHECK(model.eigenvalues[i] == doctest::Approx(lam[i]).epsilon(1e-8));
        CHECK(model.multiplicities[i] == mult[i]);
    }
}

TEST_CASE("solve_spectrum matches harmonic numbers on the interval") {
    Space interval = make_interval_space(-1.0, 1.0, 4000);
    FormMatrices fm = assemble_form_matrix(interval, legendre_basis(interval, 5));
    SpectralModel model = solve_spectrum(fm);
    REQUIRE(model.eigenvalues.size() == 6);
    CHECK(std::abs(model.eigenvalues[0]) <= 1e-8);
    for (int nn = 1; nn <= 5; ++nn)
        CHECK(model.eigenvalues[static_cast<std::size_t>(nn)] ==
              doctest::Approx(2.0 * harmonic_number(nn)).epsilon(1e-6));
}

TEST_CASE("kernel eigenvector is constant") {
    Space circle = make_circle_space(64);
    FormMatrices fm = assemble_form_matrix(circle, fourier_basis(circle, 5));
    SpectralModel model = solve_spectrum(fm);
    CHECK(std::abs(model.eigenvalues[0]) <= 1e-8);
    CHECK(model.multiplicities[0] == 1);
    // the first eigenvector has only a constant component
    Eigen::VectorXd v0 = model.eigenvectors.col(0);
    for (Eigen::Index i = 1; i < v0.size(); ++i)
        CHECK(std::abs(v0[i]) <= 1e-8 * std::abs(v0[0]));
}

TEST_CASE("conditioning error carries the pivot") {
    Space interval = make_interval_space(0.0, 1.0, 32);
    BasisSet leg = legendre_basis(interval, 2);
    BasisSet dup = leg;
    dup.values.conservativeResize(Eigen::NoChange, 4);
    dup.values.col(3) = dup.values.col(2);  // exactly dependent columns
    FormMatrices fm;
    fm.basis = dup;
    fm.space_kind = interval.kind;
    fm.M = dup.values.transpose() * interval.quadrature.weights.asDiagonal() * dup.values;
    fm.E = Eigen::MatrixXd::Zero(4, 4);
    CHECK_THROWS_AS(solve_spectrum(fm), ConditioningError);
}

TEST_CASE("apply_logdirichlet node-values examples") {
    Space interval = make_interval_space(-1.0, 1.0, 2000);
    std::vector<double> f(interval.node_count());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = interval.node(i).value;
    double v = apply_logdirichlet(interval, f, Point::coordinate(0.3), 0.3);
    CHECK(v == doctest::Approx(0.6).epsilon(5e-3));  // quadrature tolerance

    std::vector<double> ones(interval.node_count(), 1.0);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(apply_logdirichlet(interval, ones, i) == doctest::Approx(0.0));

    Space circle = make_circle_space(512);
    std::vector<double> c(circle.node_count());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::cos(circle.node(i).value);
    CHECK(apply_logdirichlet(circle, c, Point::angle(0.0), 1.0) ==
          doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("pointwise principal value evaluation is split-exact") {
    Space interval = make_interval_space(-1.0, 1.0, 2000);
    for (int nn : {1, 3, 7}) {
        auto pn = [nn](const Point& p) { return legendre_value(nn, p.value); };
        double hn = harmonic_number(nn);
        for (double x : {0.3, -0.77, 0.05}) {
            double lhs = apply_logdirichlet(interval, pn, Point::coordinate(x));
            double rhs = 2.0 * hn * legendre_value(nn, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
    Space circle = make_circle_space(512);
    auto cosf = [](const Point& p) { return std::cos(p.value); };
    CHECK(apply_logdirichlet(circle, cosf, Point::angle(0.0)) ==
          doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("weak form consistency by polarization") {
    Space shift = make_shift_space(2, 2.0, 5);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    std::vector<double> f(shift.node_count()), g(shift.node_count());
    for (auto& v : f) v = gauss(rng);
    for (auto& v : g) v = gauss(rng);
    double lhs = 0.0;
    for (std::size_t p = 0; p < shift.node_count(); ++p)
        lhs += shift.weight(p) * g[p] * apply_logdirichlet(shift, f, p);
    double rhs = dirichlet_form(shift, f, g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}

TEST_CASE("Parseval trace consistency") {
    Space interval = make_interval_space(-1.0, 1.0, 600);
    FormMatrices fm = assemble_form_matrix(interval, legendre_basis(interval, 8));
    SpectralModel model = solve_spectrum(fm);
    double eig_sum = 0.0;
    for (std::size_t i = 0; i < model.eigenvalues.size(); ++i)
        eig_sum += model.eigenvalues[i] * model.multiplicities[i];
    double trace = fm.M.llt().solve(fm.E).trace();
    CHECK(trace == doctest::Approx(eig_sum).epsilon(1e-8));
}

TEST_CASE("dirichlet energy examples") {
    Space interval = make_interval_space(-1.0, 1.0, 500);
    std::vector<double> ones(interval.node_count(), 1.0);
    CHECK(dirichlet_energy(interval, ones) == doctest::Approx(0.0));

    std::vector<double> p1(interval.node_count());
    for (std::size_t i = 0; i < p1.size(); ++i) p1[i] = interval.node(i).value;
    CHECK(dirichlet_energy(interval, p1) == doctest::Approx(4.0 / 3.0).epsilon(1e-4));

    Space shift = make_shift_space(2, 2.0, 5);
    BasisSet wav = haar_wavelets(2, 0, 5);
    std::vector<double> h(shift.node_count());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = wav.values(static_cast<Eigen::Index>(i), 0);
    CHECK(dirichlet_energy(shift, h) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("interval eigenvalue error decreases under node doubling") {
    std::vector<double> errors;
    for (int nodes : {250, 500, 1000, 2000}) {
        Space interval = make_interval_space(-1.0, 1.0, nodes);
        FormMatrices fm = assemble_form_matrix(interval, legendre_basis(interval, 6));
        SpectralModel model = solve_spectrum(fm);
        double worst = 0.0;
        for (int nn = 1; nn <= 6; ++nn)
            worst = std::max(worst,
                             std::abs(model.eigenvalues[static_cast<std::size_t>(nn)] -
                                      2.0 * harmonic_number(nn)) /
                                 (2.0 * harmonic_number(nn)));
        errors.push_back(worst);
    }
    for (std::size_t i = 1; i < errors.size(); ++i) CHECK(errors[i] < errors[i - 1]);
}

TEST_CASE("Galerkin spectrum at depth m equals the oracle restricted to levels < m") {
    Space shift = make_shift_space(2, 2.0, 5);
    ExactSpectrumCheck check = verify_shift_spectrum_exact(shift);
    REQUIRE(check.verified);
    SpectralModel oracle = shift_spectrum(2, 4);  // levels 0..4 = depth-1
    REQUIRE(check.eigenvalues.size() == oracle.eigenvalues.size());
    for (std::size_t i = 0; i < oracle.eigenvalues.size(); ++i) {
        CHECK(check.eigenvalues[i].get_d() == doctest::Approx(oracle.eigenvalues[i]));
        CHECK(check.multiplicities[i] == oracle.multiplicities[i]);
    }
}

TEST_CASE("non-finite basis values are a data error") {
    Space interval = make_interval_space(0.0, 1.0, 16);
    BasisSet bad = legendre_basis(interval, 2);
    bad.values(3, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(assemble_form_matrix(interval, bad), DataError);
}

TEST_CASE("eigenvectors are M-orthonormal") {
    Space interval = make_interval_space(-1.0, 1.0, 300);
    BasisSet mono = legendre_basis(interval, 5);
    // deliberately non-orthogonal columns: mix neighbours
    for (int j = 4; j >= 1; --j) mono.values.col(j) += 0.5 * mono.values.col(j - 1);
    mono.orthonormal = false;
    FormMatrices fm = assemble_form_matrix(interval, mono);
    SpectralModel model = solve_spectrum(fm);
    Eigen::MatrixXd gram = model.eigenvectors.transpose() * fm.M * model.eigenvectors;
    CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
    // the mixed basis spans the same space, so the spectrum is unchanged
    for (int nn = 1; nn <= 5; ++nn)
        CHECK(model.eigenvalues[static_cast<std::size_t>(nn)] ==
              doctest::Approx(2.0 * harmonic_number(nn)).epsilon(1e-3));
}
