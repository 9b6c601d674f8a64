#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "loglap/basis.hpp"
#include "loglap/space.hpp"

namespace loglap {

// Galerkin matrices of the Dirichlet form over a basis:
//   E_ij = 1/2 sum_{p != q} w_p w_q (b_i(p)-b_i(q)) (b_j(p)-b_j(q)) / d(p,q)^delta
//   M_ij = sum_p w_p b_i(p) b_j(p)
struct FormMatrices {
    Eigen::MatrixXd E;  // stiffness, symmetric PSD
    Eigen::MatrixXd M;  // mass, symmetric positive definite
    BasisSet basis;
    SpaceKind space_kind;
};

enum class SpectrumSource { galerkin, closed_form };

struct SpectralModel {
    std::vector<double> eigenvalues;     // distinct, ascending, >= 0
    std::vector<int> multiplicities;     // same length
    Eigen::MatrixXd eigenvectors;        // M-orthonormal columns in expanded order
    SpectrumSource source = SpectrumSource::galerkin;

    int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
    // multiplicity-expanded ascending sequence, capped
    std::vector<double> expanded(std::size_t cap = 1000000) const;
};

// Node-pair kernel Laplacian L with L_pq = -w_p w_q d(p,q)^-delta off the
// diagonal and row sums on it, so that E = B^T L B and f^T L f is the energy.
Eigen::MatrixXd form_kernel_matrix(const Space& space);

FormMatrices assemble_form_matrix(const Space& space, const BasisSet& basis);

// Generalized symmetric eigensolve E v = lambda M v via a Cholesky reduction
// of M; eigenvalues within multiplicity_tol*(1+|lambda|) are grouped.
SpectralModel solve_spectrum(const FormMatrices& fm, double multiplicity_tol = 1e-6);

// Discretized integral representation at a quadrature node:
//   sum_{q : d > 0} w_q (f(x) - f(q)) / d(x,q)^delta.
double apply_logdirichlet(const Space& space, std::span<const double> f, std::size_t node);

// Same sum against an arbitrary point x with caller-supplied f(x).
double apply_logdirichlet(const Space& space, std::span<const double> f, const Point& x,
                          double fx);

// Pointwise principal-value evaluation for a callable f: the integral is
// split at the singular point and integrated with graded panels (interval),
// via the continuous substitution u -> (f(x)-f(x+u))/(2 sin(u/2)) (circle),
// or exactly on the atoms (shift).
double apply_logdirichlet(const Space& space, const std::function<double(const Point&)>& f,
                          const Point& x);

// E(f,f) by the half double sum over distinct node pairs.
double dirichlet_energy(const Space& space, std::span<const double> f);

// Polarized E(f,g).
double dirichlet_form(const Space& space, std::span<const double> f, std::span<const double> g);

}  // namespace loglap
