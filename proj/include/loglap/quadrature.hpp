#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "loglap/space.hpp"

namespace loglap {

// Quadrature value of the annulus integral
//   int_{r1 < d(x,y) <= r2} d(x,y)^-exponent dmu(y),
// the difference of closed balls (the shift's clopen balls are closed balls,
// so this is the convention under which cylinder shells are exact).
double annulus_integral(const Space& space, const Point& x, double r1, double r2,
                        double exponent);

// int_{d(x,y) > r} d(x,y)^-delta dmu(y) in closed form: shell counting on the
// shift, log((x-a)/r) + log((b-x)/r) clipped at 0 on the interval,
// -2 log tan(arcsin(r/2)/2) on the circle.
double log_tail_integral(const Space& space, const Point& x, double r);

// t_r(x,y) = d(x,y)^-delta for d >= r and 0 otherwise, with per-row L1 norms.
struct TruncatedKernel {
    Space space;
    double r = 0.0;
    Eigen::VectorXd row_norms;  // ||t_r(x, .)||_L1 per node
};

TruncatedKernel make_truncated_kernel(const Space& space, double r);

// Markov-normalized application (T_r f)(x) = int T_r(x,y) f(y) dmu(y),
// each row of T_r integrating to 1.
Eigen::VectorXd truncated_kernel_apply(const TruncatedKernel& kernel,
                                       std::span<const double> f);

// ||f - T_r f||^2_L2 * log(1/r) / E(f,f); zero for constant f. Boundedness of
// this quantity over an r-grid is the compactness mechanism.
double approximation_defect(const Space& space, double r, std::span<const double> f);

// Defect sweep over an r-grid, emitted as CSV rows (r, defect).
void write_defect_sweep_csv(const Space& space, std::span<const double> f,
                            const std::vector<double>& r_grid,
                            const std::filesystem::path& path);

// One annulus-estimate check: the constant-form bound, the maximum observed
// over sampled centers, and the margin bound/observed.
struct EstimateCheck {
    std::string name;
    double bound = 0.0;
    double observed_max = 0.0;
    double margin = 0.0;
};

// Evaluates the four annulus estimates over `samples` strided centers, radii
// and exponent offsets; bounds use the space's documented regularity constant.
std::vector<EstimateCheck> annulus_estimate_checks(const Space& space, int samples,
                                              const std::vector<double>& radii,
                                              const std::vector<double>& s_values);

// JSON report with one object (bound, observed_max, margin) per check.
void write_estimate_checks_json(const std::vector<EstimateCheck>& checks,
                             const std::filesystem::path& path);

}  // namespace loglap
