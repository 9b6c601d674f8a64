#include "loglap/form_engine.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "loglap/parallel.hpp"
#include "loglap/polynomials.hpp"

namespace loglap {

namespace {

double kernel_value(const Space& space, double d) {
    return std::pow(d, -space.delta);
}

void check_finite(const Eigen::MatrixXd& m, const char* what) {
    if (!m.allFinite()) throw DataError(std::string(what) + ": non-finite values");
}

}  // namespace

std::vector<double> SpectralModel::expanded(std::size_t cap) const {
    std::vector<double> out;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        for (int k = 0; k < multiplicities[i]; ++k) {
            if (out.size() >= cap) return out;
            out.push_back(eigenvalues[i]);
        }
    }
    return out;
}

Eigen::MatrixXd form_kernel_matrix(const Space& space) {
    auto n = static_cast<Eigen::Index>(space.node_count());
    Eigen::MatrixXd L(n, n);
    parallel_row_chunks(static_cast<std::size_t>(n), [&](std::size_t, std::size_t lo,
                                                         std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            double wp = space.weight(p);
            double rowsum = 0.0;
            for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
                if (q == p) continue;
                double d = node_distance(space, p, q);
                double k = wp * space.weight(q) * kernel_value(space, d);
                L(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = -k;
                rowsum += k;
            }
            L(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)) = rowsum;
        }
    });
    return L;
}

FormMatrices assemble_form_matrix(const Space& space, const BasisSet& basis) {
    check_finite(basis.values, "assemble_form_matrix basis");
    auto n = static_cast<Eigen::Index>(space.node_count());
    if (basis.values.rows() != n)
        throw DataError("assemble_form_matrix: basis not tabulated at the space nodes");
    auto m = basis.values.cols();
    const Eigen::MatrixXd& B = basis.values;

    // E = B^T L B accumulated row by row so the n x n kernel is never stored:
    // E = sum_p [ s_p B_p^T B_p - B_p^T (sum_q k_pq B_q) ].
    // Row blocks run in parallel; partials reduce in fixed chunk order.
    std::vector<Eigen::MatrixXd> partial(kRowChunks, Eigen::MatrixXd::Zero(m, m));
    parallel_row_chunks(static_cast<std::size_t>(n), [&](std::size_t chunk, std::size_t lo,
                                                         std::size_t hi) {
        Eigen::MatrixXd& Ec = partial[chunk];
        Eigen::VectorXd kb(m);
        std::vector<double> krow(static_cast<std::size_t>(n));
        for (std::size_t p = lo; p < hi; ++p) {
            double wp = space.weight(p);
            double s = 0.0;
            for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
                double k = 0.0;
                if (q != p) {
                    double d = node_distance(space, p, q);
                    k = wp * space.weight(q) * kernel_value(space, d);
                }
                krow[q] = k;
                s += k;
            }
            kb.setZero();
            for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
                if (krow[q] != 0.0)
                    kb.noalias() += krow[q] * B.row(static_cast<Eigen::Index>(q)).transpose();
            }
            auto bp = B.row(static_cast<Eigen::Index>(p));
            Ec.noalias() += s * (bp.transpose() * bp);
            Ec.noalias() -= bp.transpose() * kb.transpose();
        }
    });
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m, m);
    for (const Eigen::MatrixXd& Ec : partial) E += Ec;
    E = 0.5 * (E + E.transpose()).eval();

    Eigen::MatrixXd M = B.transpose() * space.quadrature.weights.asDiagonal() * B;
    M = 0.5 * (M + M.transpose()).eval();

    FormMatrices fm;
    fm.E = std::move(E);
    fm.M = std::move(M);
    fm.basis = basis;
    fm.space_kind = space.kind;
    return fm;
}

SpectralModel solve_spectrum(const FormMatrices& fm, double multiplicity_tol) {
    check_finite(fm.E, "solve_spectrum E");
    check_finite(fm.M, "solve_spectrum M");
    Eigen::LLT<Eigen::MatrixXd> llt(fm.M);
    if (llt.info() != Eigen::Success)
        throw ConditioningError("solve_spectrum: mass matrix is not positive definite",
                                llt.matrixL().toDenseMatrix().diagonal().minCoeff());
    double pivot = llt.matrixL().toDenseMatrix().diagonal().minCoeff();
    if (pivot * pivot < 1e-14 * fm.M.diagonal().maxCoeff())
        throw ConditioningError("solve_spectrum: mass matrix numerically singular", pivot);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(fm.E, fm.M);
    if (solver.info() != Eigen::Success)
        throw DataError("solve_spectrum: eigensolver failed to converge");
    Eigen::VectorXd lam = solver.eigenvalues();
    double scale = 1.0 + std::abs(lam[lam.size() - 1]);
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] < -1e-10 * scale)
            throw DataError("solve_spectrum: negative eigenvalue beyond tolerance");
        if (lam[i] < 0) lam[i] = 0.0;
    }

    SpectralModel model;
    model.source = SpectrumSource::galerkin;
    model.eigenvectors = solver.eigenvectors();
    for (Eigen::Index i = 0; i < lam.size();) {
        double rep = lam[i];
        int mult = 0;
        while (i < lam.size() && lam[i] - rep <= multiplicity_tol * (1.0 + std::abs(rep))) {
            ++mult;
            ++i;
        }
        model.eigenvalues.push_back(rep);
        model.multiplicities.push_back(mult);
    }
    return model;
}

double apply_logdirichlet(const Space& space, std::span<const double> f, std::size_t node) {
    return apply_logdirichlet(space, f, space.node(node), f[node]);
}

double apply_logdirichlet(const Space& space, std::span<const double> f, const Point& x,
                          double fx) {
    if (f.size() != space.node_count())
        throw DataError("apply_logdirichlet: node-values size mismatch");
    double acc = 0.0;
    for (std::size_t q = 0; q < space.node_count(); ++q) {
        double d = distance(space, x, space.node(q));
        if (d <= 0.0) continue;
        acc += space.weight(q) * (fx - f[q]) * kernel_value(space, d);
    }
    return acc;
}

double apply_logdirichlet(const Space& space, const std::function<double(const Point&)>& f,
                          const Point& x) {
    switch (space.kind) {
        case SpaceKind::shift: {
            double fx = f(x);
            double acc = 0.0;
            for (std::size_t q = 0; q < space.node_count(); ++q) {
                double d = distance(space, x, space.node(q));
                if (d <= 0.0) continue;
                acc += space.weight(q) * (fx - f(space.node(q))) * kernel_value(space, d);
            }
            return acc;
        }
        case SpaceKind::interval: {
            double fx = f(x);
            auto integrand = [&](double y) {
                return (fx - f(Point::coordinate(y))) / std::pow(std::abs(x.value - y),
                                                                 space.delta);
            };
            double acc = 0.0;
            if (x.value > space.a) acc += graded_integrate(integrand, space.a, x.value, x.value);
            if (x.value < space.b) acc += graded_integrate(integrand, x.value, space.b, x.value);
            return acc;
        }
        case SpaceKind::circle: {
            double fx = f(x);
            // u -> (f(x) - f(x+u)) / (2 sin(u/2)) extends continuously to u = 0, 2pi
            auto integrand = [&](double u) {
                return (fx - f(Point::angle(x.value + u))) /
                       std::pow(2.0 * std::sin(0.5 * u), space.delta);
            };
            GaussRule base = gauss_legendre(12);
            int panels = std::max<int>(64, static_cast<int>(space.node_count()) / 8);
            double acc = 0.0;
            for (int p = 0; p < panels; ++p) {
                double lo = 2.0 * M_PI * p / panels;
                double hi = 2.0 * M_PI * (p + 1) / panels;
                GaussRule panel = map_rule(base, lo, hi);
                for (int i = 0; i < 12; ++i) acc += panel.weights[i] * integrand(panel.nodes[i]);
            }
            return acc;
        }
    }
    return 0.0;
}

double dirichlet_energy(const Space& space, std::span<const double> f) {
    return dirichlet_form(space, f, f);
}

double dirichlet_form(const Space& space, std::span<const double> f,
                      std::span<const double> g) {
    if (f.size() != space.node_count() || g.size() != space.node_count())
        throw DataError("dirichlet_form: node-values size mismatch");
    std::size_t n = space.node_count();
    std::vector<double> partial(kRowChunks, 0.0);
    parallel_row_chunks(n, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t p = lo; p < hi; ++p) {
            double wp = space.weight(p);
            for (std::size_t q = p + 1; q < n; ++q) {
                double d = node_distance(space, p, q);
                if (d <= 0.0) continue;
                acc += wp * space.weight(q) * (f[p] - f[q]) * (g[p] - g[q]) *
                       kernel_value(space, d);
            }
        }
        partial[chunk] = acc;
    });
    double acc = 0.0;
    for (double v : partial) acc += v;  // half double sum over unordered pairs
    return acc;
}

}  // namespace loglap
