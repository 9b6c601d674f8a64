#include "loglap/rational.hpp"

#include <cmath>

#include "loglap/basis.hpp"

namespace loglap {

namespace {

// first 1-based differing index of two equal-length words, 0 if equal
int first_difference(const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != v[k]) return static_cast<int>(k) + 1;
    return 0;
}

Rat pow_rat(long base, int exp) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return Rat(z);
}

void require_shift(const Space& space, const char* what) {
    if (space.kind != SpaceKind::shift)
        throw TypeError(std::string(what) + ": exact path is for shift spaces");
}

}  // namespace

RatMatrix rat_zeros(std::size_t rows, std::size_t cols) {
    return RatMatrix(rows, RatVector(cols, Rat(0)));
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMatrix c = rat_zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RatVector rat_mat_vec(const RatMatrix& a, const RatVector& v) {
    RatVector out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) out[i] += a[i][j] * v[j];
    return out;
}

bool rat_is_zero(const RatMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

ShiftKernelExact shift_kernel_exact(const Space& space) {
    require_shift(space, "shift_kernel_exact");
    std::size_t n = space.node_count();
    ShiftKernelExact out;
    out.w.assign(n, Rat(1) / pow_rat(space.N, space.depth));
    out.L = rat_zeros(n, n);
    Rat w2 = out.w[0] * out.w[0];
    for (std::size_t p = 0; p < n; ++p) {
        Rat rowsum(0);
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            int k = first_difference(space.node(p).word, space.node(q).word);
            Rat kern = w2 * pow_rat(space.N, k - 1);  // d^-delta = N^(k-1)
            out.L[p][q] = -kern;
            rowsum += kern;
        }
        out.L[p][p] = rowsum;
    }
    return out;
}

ShiftFormExact assemble_form_exact(const Space& space, const std::vector<RatVector>& basis) {
    ShiftKernelExact ker = shift_kernel_exact(space);
    std::size_t n = space.node_count(), m = basis.size();
    ShiftFormExact fm;
    fm.E = rat_zeros(m, m);
    fm.M = rat_zeros(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        RatVector Lbi = rat_mat_vec(ker.L, basis[i]);
        for (std::size_t j = i; j < m; ++j) {
            Rat e(0), mm(0);
            for (std::size_t p = 0; p < n; ++p) {
                if (basis[j][p] != 0) e += basis[j][p] * Lbi[p];
                if (basis[i][p] != 0 && basis[j][p] != 0)
                    mm += ker.w[p] * basis[i][p] * basis[j][p];
            }
            fm.E[i][j] = fm.E[j][i] = e;
            fm.M[i][j] = fm.M[j][i] = mm;
        }
    }
    return fm;
}

ExactSpectrumCheck verify_shift_spectrum_exact(const Space& space) {
    require_shift(space, "verify_shift_spectrum_exact");
    ShiftKernelExact ker = shift_kernel_exact(space);
    std::size_t n = space.node_count();
    int N = space.N, depth = space.depth;

    Eigen::MatrixXi B = haar_basis_unnormalized(N, depth - 1, depth);
    std::size_t m = static_cast<std::size_t>(B.cols());

    ExactSpectrumCheck check;
    if (m != n) return check;

    std::vector<RatVector> cols(m, RatVector(n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t p = 0; p < n; ++p)
            cols[j][p] = Rat(B(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(j)));

    // eigenvalue of column j: 0 for the constant, 1 + (1-1/N) * level otherwise
    auto column_eigenvalue = [&](std::size_t j) -> Rat {
        if (j == 0) return Rat(0);
        std::size_t at = 1;
        for (int lvl = 0; lvl < depth; ++lvl) {
            auto count = static_cast<std::size_t>(std::pow(static_cast<double>(N), lvl)) *
                         static_cast<std::size_t>(N - 1);
            if (j < at + count) return Rat(1) + Rat(N - 1, N) * lvl;
            at += count;
        }
        return Rat(0);
    };

    // (a) each column is an exact eigenvector: L b = lambda W b
    for (std::size_t j = 0; j < m; ++j) {
        RatVector Lb = rat_mat_vec(ker.L, cols[j]);
        Rat lam = column_eigenvalue(j);
        for (std::size_t p = 0; p < n; ++p)
            if (Lb[p] != lam * ker.w[p] * cols[j][p]) return check;
    }
    // (b) pairwise W-orthogonal with nonzero norms => an eigenbasis
    for (std::size_t i = 0; i < m; ++i) {
        Rat norm(0);
        for (std::size_t p = 0; p < n; ++p) norm += ker.w[p] * cols[i][p] * cols[i][p];
        if (norm == 0) return check;
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat dot(0);
            for (std::size_t p = 0; p < n; ++p)
                if (cols[i][p] != 0 && cols[j][p] != 0)
                    dot += ker.w[p] * cols[i][p] * cols[j][p];
            if (dot != 0) return check;
        }
    }

    check.verified = true;
    check.eigenvalues.push_back(Rat(0));
    check.multiplicities.push_back(1);
    for (int lvl = 0; lvl < depth; ++lvl) {
        check.eigenvalues.push_back(Rat(1) + Rat(N - 1, N) * lvl);
        check.multiplicities.push_back(
            static_cast<int>(std::pow(static_cast<double>(N), lvl)) * (N - 1));
    }
    return check;
}

bool commutator_identity_exact(const Space& space, const RatVector& h) {
    require_shift(space, "commutator_identity_exact");
    ShiftKernelExact ker = shift_kernel_exact(space);
    std::size_t n = space.node_count();
    if (h.size() != n) throw DataError("commutator_identity_exact: h size mismatch");

    Eigen::MatrixXi B = haar_basis_unnormalized(space.N, space.depth - 1, space.depth);
    std::size_t m = static_cast<std::size_t>(B.cols());
    RatMatrix Bm = rat_zeros(n, m);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t j = 0; j < m; ++j)
            Bm[p][j] = Rat(B(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(j)));

    // nodal operator matrices: (A f)_p = sum_q w_q (f_p - f_q) N^(k-1),
    // (K_h f)_p = sum_q w_q (h_p - h_q) N^(k-1) f_q, m_h = diag(h)
    RatMatrix A = rat_zeros(n, n), K = rat_zeros(n, n), H = rat_zeros(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        H[p][p] = h[p];
        Rat rowsum(0);
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            int k = first_difference(space.node(p).word, space.node(q).word);
            Rat kern = ker.w[q] * pow_rat(space.N, k - 1);
            A[p][q] = -kern;
            rowsum += kern;
            K[p][q] = (h[p] - h[q]) * kern;
        }
        A[p][p] = rowsum;
    }

    // defect on node values; expressing it in the Haar basis is a similarity
    RatMatrix AH = rat_mul(A, H), HA = rat_mul(H, A);
    RatMatrix D = rat_zeros(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) D[p][q] = AH[p][q] - HA[p][q] - K[p][q];
    RatMatrix DB = rat_mul(D, Bm);
    return rat_is_zero(DB);
}

}  // namespace loglap
