#pragma once

#include <string>

#include <Eigen/Core>

#include "loglap/space.hpp"

namespace loglap {

// Basis functions tabulated at the quadrature nodes of a space,
// one column per function.
struct BasisSet {
    std::string name;        // cylinder-indicators | haar | legendre | fourier | nodal
    Eigen::MatrixXd values;  // node_count x size
    bool orthonormal = false;

    int size() const { return static_cast<int>(values.cols()); }
};

// One indicator column per quadrature node.
BasisSet nodal_basis(const Space& space);

// Indicators of the level-m cylinders of a shift space, m <= depth.
// The "full cylinder basis" of a depth-d shift is level = depth.
BasisSet cylinder_basis(const Space& space, int level);

// L2-normalized Haar wavelets of one level: each supported in a single
// level-`level` cylinder, constant on its children, mean zero. Helmert
// completion of the constant vector, deterministic given N.
BasisSet haar_wavelets(int N, int level, int depth);

// Constant plus all wavelet levels 0..max_level (orthonormal).
BasisSet haar_basis(const Space& space, int max_level);

// Unnormalized integer-valued wavelet columns (same layout as haar_basis);
// used by the exact rational path, where sqrt(N) factors are unavailable.
Eigen::MatrixXi haar_basis_unnormalized(int N, int max_level, int depth);

// Legendre polynomials of degree 0..max_degree rescaled to [a,b],
// L2(Lebesgue)-orthonormal.
BasisSet legendre_basis(const Space& space, int max_degree);

// 1/sqrt(2pi), cos(k t)/sqrt(pi), sin(k t)/sqrt(pi) for k = 1..max_freq.
BasisSet fourier_basis(const Space& space, int max_freq);

}  // namespace loglap
