#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "loglap/basis.hpp"
#include "loglap/space.hpp"

namespace loglap {

// Sampled modulus of continuity with its Dini data. dini_constant
// approximates int_0^1 omega(t)/t dt by closed-form integration of the
// piecewise-linear interpolant over the t-grid; with the default geometric
// grid (theta = 1/e) the sum is two-sided comparable to the integral.
struct DiniProfile {
    std::vector<double> t_grid;           // decreasing scale fractions in (0,1]
    std::vector<double> omega;            // omega_f at each t
    double dini_constant = 0.0;
    double sup_norm = 0.0;
    double dini_norm = 0.0;               // sup_norm + dini_constant
    std::size_t pair_sample_count = 0;    // node pairs scanned
};

// Default grid theta^0 .. theta^max_power with theta = 1/e.
std::vector<double> geometric_t_grid(int max_power);

// omega_f(t) = max |f(p)-f(q)| over node pairs with d(p,q) <= t diam; exact
// over all pairs up to 4096 nodes, strided subsample beyond (count recorded).
DiniProfile modulus_of_continuity(const Space& space, std::span<const double> f,
                                  const std::vector<double>& t_grid);

// max over the grid of omega_fg - (||f||_inf omega_g + ||g||_inf omega_f);
// the product rule makes this <= 0 up to roundoff on sampled pairs.
double dini_algebra_defect(const Space& space, std::span<const double> f,
                           std::span<const double> g, const std::vector<double>& t_grid);

struct KernelMatrixResult {
    Eigen::MatrixXd matrix;   // <b_i, K_h b_j> with the mass-matrix pairing
    double op_norm = 0.0;     // L2 operator norm estimate on the basis span
};

// Commutator kernel K_h(x,y) = (h(x) - h(y)) / d(x,y)^delta compressed to the
// given basis.
KernelMatrixResult commutator_kernel_matrix(const Space& space, std::span<const double> h,
                                            const BasisSet& basis);

// || ([A, m_h] - K_h) || in the discretized L2 operator norm over the basis
// span, with A the Galerkin operator of the form. Basis must be the oracle
// family of the space (haar / cylinder on shift, legendre on interval,
// fourier on circle).
double commutator_defect(const Space& space, std::span<const double> h, const BasisSet& basis);

// Galerkin operator norm of [A, m_h] alone (growth-trend studies).
double commutator_norm(const Space& space, std::span<const double> h, const BasisSet& basis);

// Least-squares slope of log omega(t) vs log t over t in [t_lo, t_hi]:
// the empirical Hoelder exponent of the sampled function.
double fit_holder_exponent(const DiniProfile& profile, double t_lo, double t_hi);

}  // namespace loglap
