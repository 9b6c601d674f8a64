#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "loglap/space.hpp"

namespace loglap {

// Disk automorphism gamma(z) = e^{i rot} (z - a)/(1 - conj(a) z), |a| < 1,
// acting on the boundary circle with conformal derivative
// |gamma'(z)| = (1 - |a|^2) / |1 - conj(a) z|^2.
struct MobiusMap {
    std::complex<double> a{0.0, 0.0};
    double rotation = 0.0;

    MobiusMap() = default;
    MobiusMap(std::complex<double> a_, double rotation_);

    std::complex<double> apply(std::complex<double> z) const;
    double derivative_at(double theta) const;  // |gamma'(e^{i theta})|
    MobiusMap inverse() const;
    bool is_rotation() const { return std::abs(a) == 0.0; }
};

struct MobiusImage {
    double theta_prime = 0.0;  // image angle in [0, 2pi)
    double deriv = 0.0;        // conformal derivative, > 0
};

MobiusImage mobius_evaluate(const MobiusMap& map, double theta);

// max over sampled pairs of | d(gx, gy) - |g'(x)|^{1/2} |g'(y)|^{1/2} d(x,y) |.
double conformal_identity_defect(const MobiusMap& map, int samples);

struct UnitaryMatrixResult {
    Eigen::MatrixXd coeffs;              // compression <b_i, U(gamma) b_j>
    Eigen::MatrixXd transformed_values;  // U(gamma) b_j sampled at the nodes
    double unitarity_defect = 0.0;       // || Gram_W(U b) - M ||_max
    bool under_resolved = false;         // quad_nodes < 8 * max_freq
};

// U(gamma) f(x) = |(gamma^-1)'(x)|^{1/2} f(gamma^-1 x) in the orthonormal
// real Fourier basis on quad_nodes equispaced points. Unitarity is checked
// through the change-of-variables Gram matrix of the transformed functions,
// which is exactly M in L2; the reported defect is pure quadrature error.
UnitaryMatrixResult unitary_matrix(const MobiusMap& map, int max_freq, int quad_nodes);

enum class CommutatorKind { log, fractional };

// Fractional circle eigenvalues lam_k^(alpha) of the kernel d^-(1+alpha),
// by graded-panel quadrature of (1 - cos ku)/(2 sin(u/2))^(1+alpha).
std::vector<double> fractional_circle_eigenvalues(int max_freq, double alpha);

// The fractional operator's spectral data: positive, increasing, growing
// like c k^alpha (polynomial, against the log growth of the base operator).
struct FractionalModel {
    double alpha = 0.5;
    std::vector<double> eigenvalues;  // index k, entry 0 unused (lam_0 = 0)
};

FractionalModel fractional_model(int max_freq, double alpha);

struct CommutatorGrowth {
    std::vector<int> freq_list;
    std::vector<double> norms;       // operator norm of the K-truncated [Op, U]
    std::string verdict;             // bounded-trend | growing-trend
};

// For each K in freq_list, the operator norm of P_K [Op, U(gamma)] P_K where
// Op is diagonal in the Fourier basis with the log (lam_k) or fractional
// (lam_k^(alpha)) circle eigenvalues. Matrix elements (lam_i - lam_j) U_ij
// are computed spectrally on an equispaced grid.
CommutatorGrowth commutator_growth(const MobiusMap& map, CommutatorKind kind, double alpha,
                                   const std::vector<int>& freq_list, int quad_nodes = 0);

}  // namespace loglap
