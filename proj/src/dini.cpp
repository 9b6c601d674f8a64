#include "loglap/dini.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include "loglap/form_engine.hpp"
#include "loglap/parallel.hpp"

namespace loglap {

namespace {

constexpr std::size_t kMaxExactNodes = 4096;

// (distance, |df|) pairs sorted by distance with prefix-max jumps
struct PairScan {
    std::vector<double> dist;
    std::vector<double> peak;  // running max of |df| up to each distance
    std::size_t pair_count = 0;

    double omega_at(double d_threshold) const {
        auto it = std::upper_bound(dist.begin(), dist.end(), d_threshold);
        if (it == dist.begin()) return 0.0;
        return peak[static_cast<std::size_t>(it - dist.begin()) - 1];
    }
};

PairScan scan_pairs(const Space& space, std::span<const double> f) {
    std::size_t n = space.node_count();
    std::size_t stride = 1;
    while ((n + stride - 1) / stride > kMaxExactNodes) ++stride;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);

    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(idx.size() * (idx.size() - 1) / 2);
    for (std::size_t ii = 0; ii < idx.size(); ++ii)
        for (std::size_t jj = ii + 1; jj < idx.size(); ++jj)
            pairs.emplace_back(node_distance(space, idx[ii], idx[jj]),
                               std::abs(f[idx[ii]] - f[idx[jj]]));
    std::sort(pairs.begin(), pairs.end());

    PairScan scan;
    scan.pair_count = pairs.size();
    scan.dist.reserve(pairs.size());
    scan.peak.reserve(pairs.size());
    double running = 0.0;
    for (const auto& [d, df] : pairs) {
        running = std::max(running, df);
        scan.dist.push_back(d);
        scan.peak.push_back(running);
    }
    return scan;
}

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw ParameterDomainError("t_grid must be nonempty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0) || t_grid[i] > 1.0)
            throw ParameterDomainError("t_grid values must lie in (0, 1]");
        if (i > 0 && !(t_grid[i] < t_grid[i - 1]))
            throw ParameterDomainError("t_grid must be strictly decreasing");
    }
}

// int omega(t)/t dt over [t1, t0] with omega linear between the samples
double cell_integral(double t0, double w0, double t1, double w1) {
    double slope = (w0 - w1) / (t0 - t1);
    double intercept = w1 - slope * t1;
    return slope * (t0 - t1) + intercept * std::log(t0 / t1);
}

// L2 operator norm of M^-1 X on the basis span: || L^-1 X L^-T ||_2 with
// M = L L^T.
double weighted_op_norm(const Eigen::MatrixXd& X, const Eigen::MatrixXd& M) {
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
        throw ConditioningError("weighted_op_norm: mass matrix not positive definite", 0.0);
    Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd T = L.triangularView<Eigen::Lower>().solve(X);
    T = L.triangularView<Eigen::Lower>().solve(T.transpose()).transpose();
    return T.jacobiSvd().singularValues()(0);
}

void require_oracle_basis(const Space& space, const BasisSet& basis) {
    bool ok = (space.kind == SpaceKind::shift &&
               (basis.name == "haar" || basis.name == "cylinder-indicators")) ||
              (space.kind == SpaceKind::interval && basis.name == "legendre") ||
              (space.kind == SpaceKind::circle && basis.name == "fourier");
    if (!ok)
        throw DomainError("commutator_defect: basis '" + basis.name +
                          "' is not the oracle family of this space");
}

}  // namespace

std::vector<double> geometric_t_grid(int max_power) {
    std::vector<double> grid;
    for (int k = 0; k <= max_power; ++k) grid.push_back(std::exp(-static_cast<double>(k)));
    return grid;
}

DiniProfile modulus_of_continuity(const Space& space, std::span<const double> f,
                                  const std::vector<double>& t_grid) {
    check_grid(t_grid);
    if (f.size() != space.node_count())
        throw DataError("modulus_of_continuity: node-values size mismatch");

    PairScan scan = scan_pairs(space, f);
    DiniProfile profile;
    profile.t_grid = t_grid;
    profile.pair_sample_count = scan.pair_count;
    for (double t : t_grid) profile.omega.push_back(scan.omega_at(t * space.diam));
    for (double v : f) profile.sup_norm = std::max(profile.sup_norm, std::abs(v));

    double din = 0.0;
    for (std::size_t k = 0; k + 1 < t_grid.size(); ++k)
        din += cell_integral(t_grid[k], profile.omega[k], t_grid[k + 1], profile.omega[k + 1]);
    // the grid may start below 1: extend with constant omega up to t = 1
    if (t_grid.front() < 1.0)
        din += profile.omega.front() * std::log(1.0 / t_grid.front());
    profile.dini_constant = din;
    profile.dini_norm = profile.sup_norm + profile.dini_constant;
    return profile;
}

double dini_algebra_defect(const Space& space, std::span<const double> f,
                           std::span<const double> g, const std::vector<double>& t_grid) {
    std::vector<double> fg(f.size());
    double f_inf = 0.0, g_inf = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        fg[i] = f[i] * g[i];
        f_inf = std::max(f_inf, std::abs(f[i]));
        g_inf = std::max(g_inf, std::abs(g[i]));
    }
    DiniProfile pf = modulus_of_continuity(space, f, t_grid);
    DiniProfile pg = modulus_of_continuity(space, g, t_grid);
    DiniProfile pfg = modulus_of_continuity(space, fg, t_grid);
    double defect = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < t_grid.size(); ++k)
        defect = std::max(defect, pfg.omega[k] - (pg.omega[k] * f_inf + pf.omega[k] * g_inf));
    return defect;
}

KernelMatrixResult commutator_kernel_matrix(const Space& space, std::span<const double> h,
                                            const BasisSet& basis) {
    if (h.size() != space.node_count())
        throw DataError("commutator_kernel_matrix: node-values size mismatch");
    if (!basis.values.allFinite())
        throw DataError("commutator_kernel_matrix: non-finite basis values");
    auto n = static_cast<Eigen::Index>(space.node_count());
    const Eigen::MatrixXd& B = basis.values;

    // (K_h B)(p, j) = sum_q w_q (h_p - h_q) d^-delta B(q, j); rows independent
    Eigen::MatrixXd KB = Eigen::MatrixXd::Zero(n, B.cols());
    parallel_row_chunks(static_cast<std::size_t>(n), [&](std::size_t, std::size_t lo,
                                                         std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            auto row = KB.row(static_cast<Eigen::Index>(p));
            for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
                if (q == p) continue;
                double d = node_distance(space, p, q);
                if (d <= 0.0) continue;
                double k = space.weight(q) * (h[p] - h[q]) * std::pow(d, -space.delta);
                if (k != 0.0) row.noalias() += k * B.row(static_cast<Eigen::Index>(q));
            }
        }
    });
    KernelMatrixResult result;
    result.matrix = B.transpose() * space.quadrature.weights.asDiagonal() * KB;
    if (!result.matrix.allFinite())
        throw DataError("commutator_kernel_matrix: non-finite entries");
    Eigen::MatrixXd M = B.transpose() * space.quadrature.weights.asDiagonal() * B;
    result.op_norm = weighted_op_norm(result.matrix, M);
    return result;
}

double commutator_defect(const Space& space, std::span<const double> h,
                         const BasisSet& basis) {
    require_oracle_basis(space, basis);
    FormMatrices fm = assemble_form_matrix(space, basis);
    const Eigen::MatrixXd& B = basis.values;
    Eigen::MatrixXd M = fm.M;
    Eigen::MatrixXd H = B.transpose() * space.quadrature.weights.asDiagonal() *
                        Eigen::Map<const Eigen::VectorXd>(h.data(),
                                                          static_cast<Eigen::Index>(h.size()))
                            .asDiagonal() *
                        B;
    KernelMatrixResult kh = commutator_kernel_matrix(space, h, basis);

    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
        throw ConditioningError("commutator_defect: singular mass matrix", 0.0);
    auto minv = [&](const Eigen::MatrixXd& X) { return llt.solve(X).eval(); };
    Eigen::MatrixXd A = minv(fm.E);
    Eigen::MatrixXd Hm = minv(H);
    Eigen::MatrixXd D = A * Hm - Hm * A - minv(kh.matrix);
    return weighted_op_norm(M * D, M);
}

double commutator_norm(const Space& space, std::span<const double> h, const BasisSet& basis) {
    FormMatrices fm = assemble_form_matrix(space, basis);
    const Eigen::MatrixXd& B = basis.values;
    Eigen::MatrixXd H = B.transpose() * space.quadrature.weights.asDiagonal() *
                        Eigen::Map<const Eigen::VectorXd>(h.data(),
                                                          static_cast<Eigen::Index>(h.size()))
                            .asDiagonal() *
                        B;
    Eigen::LLT<Eigen::MatrixXd> llt(fm.M);
    if (llt.info() != Eigen::Success)
        throw ConditioningError("commutator_norm: singular mass matrix", 0.0);
    Eigen::MatrixXd A = llt.solve(fm.E);
    Eigen::MatrixXd Hm = llt.solve(H);
    Eigen::MatrixXd C = A * Hm - Hm * A;
    return weighted_op_norm(fm.M * C, fm.M);
}

double fit_holder_exponent(const DiniProfile& profile, double t_lo, double t_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (std::size_t k = 0; k < profile.t_grid.size(); ++k) {
        double t = profile.t_grid[k], w = profile.omega[k];
        if (t < t_lo || t > t_hi || w <= 0) continue;
        double x = std::log(t), y = std::log(w);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 3) throw UndeterminedError("fit_holder_exponent: too few usable samples");
    double denom = count * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) throw UndeterminedError("fit_holder_exponent: degenerate fit");
    return (count * sxy - sx * sy) / denom;
}

}  // namespace loglap
