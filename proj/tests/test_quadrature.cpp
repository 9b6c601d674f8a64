#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "loglap/basis.hpp"
#include "loglap/form_engine.hpp"
#include "loglap/quadrature.hpp"

using namespace loglap;

TEST_CASE("annulus integral examples") {
    Space interval = make_interval_space(-1.0, 1.0, 2000);
    Point origin = Point::coordinate(0.0);
    // exponent 0: the annulus measure
    CHECK(annulus_integral(interval, origin, 0.0, 1.0, 0.0) ==
          doctest::Approx(2.0).epsilon(1e-2));
    // int_{1/e < |y| <= 1} dy/|y| = 2
    CHECK(annulus_integral(interval, origin, std::exp(-1.0), 1.0, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-2));

    // cylinder annulus carries a single distance shell: 2^n * (2^-n - 2^-n-1) = 1/2
    Space shift = make_shift_space(2, 2.0, 6);
    for (int n = 1; n <= 3; ++n) {
        double v = annulus_integral(shift, shift.node(5), std::pow(2.0, -(n + 1)),
                                    std::pow(2.0, -n) + 1e-9, shift.delta);
        CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
    }

    CHECK_THROWS_AS(annulus_integral(interval, origin, 0.5, 0.5, 1.0),
                    ParameterDomainError);
    CHECK_THROWS_AS(annulus_integral(interval, origin, 0.7, 0.2, 1.0),
                    ParameterDomainError);
}

TEST_CASE("log tail integral closed forms") {
    Space interval = make_interval_space(-1.0, 1.0, 64);
    CHECK(log_tail_integral(interval, Point::coordinate(0.0), 0.1) ==
          doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-12));

    Space shift = make_shift_space(2, 2.0, 10);
    for (int n = 1; n <= 8; ++n)
        CHECK(log_tail_integral(shift, shift.node(0), std::pow(2.0, -n)) ==
              doctest::Approx(0.5 * n));

    // circle closed form against the node sum
    Space circle = make_circle_space(4096);
    double closed = log_tail_integral(circle, circle.node(0), 0.3);
    double quad = 0.0;
    for (std::size_t q = 0; q < circle.node_count(); ++q) {
        double d = node_distance(circle, 0, q);
        if (d > 0.3) quad += circle.weight(q) / d;
    }
    CHECK(closed == doctest::Approx(quad).epsilon(1e-3));

    CHECK_THROWS_AS(log_tail_integral(interval, Point::coordinate(0.0), 3.0),
                    ParameterDomainError);
}

TEST_CASE("log tail to log(1/r) ratio stays in a fixed band") {
    Space shift = make_shift_space(2, 2.0, 14);
    Space interval = make_interval_space(-1.0, 1.0, 512);
    Space circle = make_circle_space(512);
    for (const Space* s : {&shift, &interval, &circle}) {
        for (double r = 1e-4; r <= 1e-1 + 1e-12; r *= 10.0) {
            double ratio = log_tail_integral(*s, s->node(s->node_count() / 3), r) /
                           std::log(1.0 / r);
            CHECK(ratio >= 0.5);
            CHECK(ratio <= 3.5);
        }
    }
}

TEST_CASE("truncated kernel is row stochastic and fixes constants") {
    Space interval = make_interval_space(-1.0, 1.0, 300);
    TruncatedKernel kernel = make_truncated_kernel(interval, 0.25);
    std::vector<double> ones(interval.node_count(), 1.0);
    Eigen::VectorXd t1 = truncated_kernel_apply(kernel, ones);
    for (Eigen::Index i = 0; i < t1.size(); ++i)
        CHECK(t1[i] == doctest::Approx(1.0).epsilon(1e-10));

    // averaging bound for f(x) = x
    std::vector<double> f(interval.node_count());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = interval.node(i).value;
    Eigen::VectorXd tf = truncated_kernel_apply(kernel, f);
    CHECK(tf.maxCoeff() <= 1.0 + 1e-12);
    CHECK(tf.minCoeff() >= -1.0 - 1e-12);

    CHECK_THROWS_AS(make_truncated_kernel(interval, interval.diam),
                    ParameterDomainError);
}

TEST_CASE("degenerate truncation") {
    // radius large enough that interior nodes see an empty kernel row
    Space interval = make_interval_space(-1.0, 1.0, 300);
    CHECK_THROWS_AS(make_truncated_kernel(interval, 1.9999999), DegenerateTruncationError);
}

TEST_CASE("wavelet approximation bound") {
    Space shift = make_shift_space(2, 2.0, 6);
    BasisSet wav = haar_wavelets(2, 2, 6);
    std::vector<double> f(shift.node_count());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = wav.values(static_cast<Eigen::Index>(i), 0);
    double r = std::pow(2.0, -4);
    TruncatedKernel kernel = make_truncated_kernel(shift, r);
    Eigen::VectorXd tf = truncated_kernel_apply(kernel, f);
    double diff2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        double d = f[i] - tf[static_cast<Eigen::Index>(i)];
        diff2 += shift.weight(i) * d * d;
    }
    double energy = dirichlet_energy(shift, f);
    double K = std::sqrt(diff2) / (std::sqrt(energy) / std::sqrt(std::log(1.0 / r)));
    CHECK(K > 0.0);
    CHECK(K < 10.0);  // recorded constant stays desk-scale
}

TEST_CASE("approximation defect is bounded over the r grid") {
    Space interval = make_interval_space(-1.0, 1.0, 400);
    std::vector<double> f(interval.node_count());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = interval.node(i).value;
    double worst = 0.0;
    for (double r : {1e-1, 1e-2, 1e-3}) {
        double defect = approximation_defect(interval, r, f);
        CHECK(std::isfinite(defect));
        worst = std::max(worst, defect);
    }
    CHECK(worst < 50.0);

    std::vector<double> ones(interval.node_count(), 1.0);
    CHECK(approximation_defect(interval, 0.01, ones) == 0.0);

    Space shift = make_shift_space(2, 2.0, 9);
    BasisSet wav = haar_wavelets(2, 1, 9);
    std::vector<double> w(shift.node_count());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = wav.values(static_cast<Eigen::Index>(i), 0);
    std::vector<double> defects;
    for (int k = 3; k <= 8; ++k)
        defects.push_back(approximation_defect(shift, std::pow(2.0, -k), w));
    for (double d : defects) CHECK(d < 50.0);
}

TEST_CASE("annulus regularity estimates") {
    Space interval = make_interval_space(-1.0, 1.0, 1000);
    Space shift = make_shift_space(2, 2.0, 10);
    for (const Space* s : {&interval, &shift}) {
        double C = s->regularity_constant;
        for (double snum : {0.25, 0.5, 1.0}) {
            double bound_const = C * std::exp(s->delta + snum) / (std::exp(snum) - 1.0);
            for (double r : {0.0625, 0.125, 0.25}) {
                const Point& x = s->node(s->node_count() / 2);
                // (1) near-diagonal annulus with exponent delta - s
                double near = annulus_integral(*s, x, 0.0, r, s->delta - snum);
                CHECK(near <= bound_const * std::pow(r, snum) * (1 + 1e-9));
                // (2) tail with exponent delta + s
                double tail = annulus_integral(*s, x, r, s->diam, s->delta + snum);
                CHECK(tail <= bound_const * std::pow(r, -snum) * (1 + 1e-9));
            }
        }
        // (3) unit annulus is bounded by C e^delta
        for (double r : {0.25, 0.5}) {
            double one = annulus_integral(*s, s->node(1), r / std::exp(1.0), r, s->delta);
            CHECK(one <= C * std::exp(s->delta) * (1 + 1e-9));
        }
    }
}

TEST_CASE("defect sweep and estimate check reports") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "loglap_quad_reports";
    fs::create_directories(dir);

    Space interval = make_interval_space(-1.0, 1.0, 300);
    std::vector<double> f(interval.node_count());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = interval.node(i).value;
    write_defect_sweep_csv(interval, f, {1e-1, 1e-2}, dir / "sweep.csv");
    std::ifstream in(dir / "sweep.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "r,defect");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 2);

    std::vector<EstimateCheck> checks =
        annulus_estimate_checks(interval, 16, {0.0625, 0.25}, {0.25, 0.5, 1.0});
    CHECK(checks.size() == 8);  // near/tail per s, unit annulus, log-tail ratio
    for (const EstimateCheck& check : checks) {
        CHECK(check.margin >= 1.0);  // every estimate holds with room
        CHECK(check.observed_max > 0.0);
    }
    write_estimate_checks_json(checks, dir / "estimates.json");
    CHECK(fs::exists(dir / "estimates.json"));
}
