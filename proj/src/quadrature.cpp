#include "loglap/quadrature.hpp"

#include <cmath>

#include "loglap/form_engine.hpp"
#include "loglap/parallel.hpp"
#include "loglap/report.hpp"

namespace loglap {

double annulus_integral(const Space& space, const Point& x, double r1, double r2,
                        double exponent) {
    if (!(r1 >= 0) || !(r1 < r2) || !(r2 <= space.diam))
        throw ParameterDomainError("annulus_integral: need 0 <= r1 < r2 <= diam");
    double acc = 0.0;
    for (std::size_t q = 0; q < space.node_count(); ++q) {
        double d = distance(space, x, space.node(q));
        if (d > r1 && d <= r2) acc += space.weight(q) * std::pow(d, -exponent);
    }
    return acc;
}

double log_tail_integral(const Space& space, const Point& x, double r) {
    if (!(r > 0) || !(r < space.diam))
        throw ParameterDomainError("log_tail_integral: need 0 < r < diam");
    if (x.kind != space.kind) throw TypeError("log_tail_integral: point kind mismatch");
    switch (space.kind) {
        case SpaceKind::shift: {
            // shells {d = lambda^-k} have mass N^-k (1 - 1/N) and constant
            // integrand N^k, so each shell with lambda^-k > r contributes 1 - 1/N
            int count = 0;
            double s = 1.0;
            for (int k = 0; k < space.depth; ++k) {
                if (s > r) ++count;
                s /= space.lambda;
            }
            return (1.0 - 1.0 / space.N) * count;
        }
        case SpaceKind::interval: {
            double left = x.value - space.a;
            double right = space.b - x.value;
            double acc = 0.0;
            if (left > r) acc += std::log(left / r);
            if (right > r) acc += std::log(right / r);
            return acc;
        }
        case SpaceKind::circle: {
            // 2 int_{u0}^{pi} du / (2 sin(u/2)) = -2 log tan(u0/4), u0 = 2 arcsin(r/2)
            double u0 = 2.0 * std::asin(0.5 * r);
            return -2.0 * std::log(std::tan(0.25 * u0));
        }
    }
    return 0.0;
}

TruncatedKernel make_truncated_kernel(const Space& space, double r) {
    if (!(r > 0) || !(r < space.diam))
        throw ParameterDomainError("make_truncated_kernel: need 0 < r < diam");
    TruncatedKernel kernel;
    kernel.space = space;
    kernel.r = r;
    auto n = static_cast<Eigen::Index>(space.node_count());
    kernel.row_norms.resize(n);
    parallel_row_chunks(static_cast<std::size_t>(n), [&](std::size_t, std::size_t lo,
                                                         std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            double norm = 0.0;
            for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
                double d = node_distance(space, p, q);
                if (d >= r) norm += space.weight(q) * std::pow(d, -space.delta);
            }
            kernel.row_norms[static_cast<Eigen::Index>(p)] = norm;
        }
    });
    if (!(kernel.row_norms.minCoeff() > 0))
        throw DegenerateTruncationError("make_truncated_kernel: zero-mass kernel row");
    return kernel;
}

Eigen::VectorXd truncated_kernel_apply(const TruncatedKernel& kernel,
                                       std::span<const double> f) {
    const Space& space = kernel.space;
    if (f.size() != space.node_count())
        throw DataError("truncated_kernel_apply: node-values size mismatch");
    auto n = static_cast<Eigen::Index>(space.node_count());
    Eigen::VectorXd out(n);
    parallel_row_chunks(static_cast<std::size_t>(n), [&](std::size_t, std::size_t lo,
                                                         std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            double acc = 0.0;
            for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
                double d = node_distance(space, p, q);
                if (d >= kernel.r) acc += space.weight(q) * std::pow(d, -space.delta) * f[q];
            }
            out[static_cast<Eigen::Index>(p)] = acc / kernel.row_norms[static_cast<Eigen::Index>(p)];
        }
    });
    return out;
}

void write_defect_sweep_csv(const Space& space, std::span<const double> f,
                            const std::vector<double>& r_grid,
                            const std::filesystem::path& path) {
    CsvWriter csv(path);
    csv.header({"r", "defect"});
    for (double r : r_grid)
        csv.row({csv_field(r), csv_field(approximation_defect(space, r, f))});
    csv.close();
}

std::vector<EstimateCheck> annulus_estimate_checks(const Space& space, int samples,
                                              const std::vector<double>& radii,
                                              const std::vector<double>& s_values) {
    if (samples < 1) throw ParameterDomainError("annulus_estimate_checks: samples >= 1");
    std::vector<std::size_t> centers;
    int count = std::min<int>(samples, static_cast<int>(space.node_count()));
    for (int i = 0; i < count; ++i)
        centers.push_back(static_cast<std::size_t>(
            (static_cast<long long>(i) * space.node_count()) / count));

    double C = space.regularity_constant;
    std::vector<EstimateCheck> checks;
    for (double s : s_values) {
        double c_s = C * std::exp(space.delta + s) / (std::exp(s) - 1.0);
        EstimateCheck near{"near_diagonal_s=" + format_double(s), 0.0, 0.0, 0.0};
        EstimateCheck tail{"tail_s=" + format_double(s), 0.0, 0.0, 0.0};
        double near_margin = 1e300, tail_margin = 1e300;
        for (std::size_t idx : centers) {
            const Point& x = space.node(idx);
            for (double r : radii) {
                double b1 = c_s * std::pow(r, s);
                double v1 = annulus_integral(space, x, 0.0, r, space.delta - s);
                near.observed_max = std::max(near.observed_max, v1);
                near.bound = std::max(near.bound, b1);
                if (v1 > 0) near_margin = std::min(near_margin, b1 / v1);
                double b2 = c_s * std::pow(r, -s);
                double v2 = annulus_integral(space, x, r, space.diam, space.delta + s);
                tail.observed_max = std::max(tail.observed_max, v2);
                tail.bound = std::max(tail.bound, b2);
                if (v2 > 0) tail_margin = std::min(tail_margin, b2 / v2);
            }
        }
        near.margin = near_margin;
        tail.margin = tail_margin;
        checks.push_back(near);
        checks.push_back(tail);
    }
    EstimateCheck unit{"unit_annulus", C * std::exp(space.delta), 0.0, 0.0};
    EstimateCheck logtail{"log_tail_ratio", 3.5, 0.0, 0.0};
    for (std::size_t idx : centers) {
        const Point& x = space.node(idx);
        for (double r : radii) {
            unit.observed_max = std::max(
                unit.observed_max,
                annulus_integral(space, x, r / std::exp(1.0), r, space.delta));
            if (r < space.diam)
                logtail.observed_max =
                    std::max(logtail.observed_max,
                             log_tail_integral(space, x, r) / std::log(1.0 / r));
        }
    }
    unit.margin = unit.bound / std::max(unit.observed_max, 1e-300);
    logtail.margin = logtail.bound / std::max(logtail.observed_max, 1e-300);
    checks.push_back(unit);
    checks.push_back(logtail);
    return checks;
}

void write_estimate_checks_json(const std::vector<EstimateCheck>& checks,
                             const std::filesystem::path& path) {
    Json j = Json::array();
    for (const EstimateCheck& check : checks)
        j.push_back(Json{{"name", check.name},
                         {"bound", check.bound},
                         {"observed_max", check.observed_max},
                         {"margin", check.margin}});
    write_json(path, j);
}

double approximation_defect(const Space& space, double r, std::span<const double> f) {
    double energy = dirichlet_energy(space, f);
    double fbar = 0.0;
    for (std::size_t p = 0; p < space.node_count(); ++p) fbar += space.weight(p) * f[p];
    fbar /= space.total_mass;
    double scale = 0.0;
    for (std::size_t p = 0; p < space.node_count(); ++p)
        scale += space.weight(p) * (f[p] - fbar) * (f[p] - fbar);
    if (energy <= 1e-14 * (1.0 + scale)) return 0.0;  // constants are fixed by T_r

    TruncatedKernel kernel = make_truncated_kernel(space, r);
    Eigen::VectorXd tf = truncated_kernel_apply(kernel, f);
    double diff2 = 0.0;
    for (std::size_t p = 0; p < space.node_count(); ++p) {
        double d = f[p] - tf[static_cast<Eigen::Index>(p)];
        diff2 += space.weight(p) * d * d;
    }
    return diff2 * std::log(1.0 / r) / energy;
}

}  // namespace loglap
