#pragma once

#include <vector>

#include <gmpxx.h>

#include "loglap/space.hpp"

namespace loglap {

// Exact arithmetic path for shift spaces. All geometric data of the depth-d
// model is rational: weights are N^-d and d(p,q)^-delta = N^(k-1) because
// lambda^delta = N, so form and mass matrices have exact entries.
using Rat = mpq_class;
using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

RatMatrix rat_zeros(std::size_t rows, std::size_t cols);
RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector rat_mat_vec(const RatMatrix& a, const RatVector& v);
bool rat_is_zero(const RatMatrix& a);

struct ShiftKernelExact {
    RatMatrix L;      // node-pair form kernel, E(f,g) = f^T L g on node values
    RatVector w;      // node weights
};

ShiftKernelExact shift_kernel_exact(const Space& space);

// Exact Galerkin matrices over integer-valued basis columns.
struct ShiftFormExact {
    RatMatrix E;
    RatMatrix M;
};
ShiftFormExact assemble_form_exact(const Space& space, const std::vector<RatVector>& basis);

struct ExactSpectrumCheck {
    bool verified = false;
    std::vector<Rat> eigenvalues;   // distinct, ascending: 0, 1, 1+(1-1/N), ...
    std::vector<int> multiplicities;
};

// Verifies in exact arithmetic that the Galerkin operator of the full
// depth-d cylinder basis has spectrum {0} u {1+(1-1/N)n : n < depth} with
// multiplicities {1} u {N^n (N-1)}: every unnormalized Haar wavelet vector
// is an exact eigenvector, and together with the constant they form an
// M-orthogonal basis of the 64-dim problem, which pins the whole spectrum.
ExactSpectrumCheck verify_shift_spectrum_exact(const Space& space);

// Exact norm check || [A, m_h] - K_h || = 0 on the depth-d model in the
// unnormalized Haar basis, h given as node values (exact rationals).
bool commutator_identity_exact(const Space& space, const RatVector& h);

}  // namespace loglap
