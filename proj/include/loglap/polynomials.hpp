#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace loglap {

// Legendre polynomial P_n on [-1,1] by the three-term recurrence.
double legendre_value(int n, double x);

// Derivative P_n'(x) away from the endpoints.
double legendre_derivative(int n, double x);

// n-th harmonic number h_n = sum_{k<=n} 1/k.
double harmonic_number(int n);

struct GaussRule {
    Eigen::VectorXd nodes;    // ascending
    Eigen::VectorXd weights;  // positive, sum 2 on [-1,1]
};

// n-point Gauss-Legendre rule on [-1,1] (Newton on P_n).
GaussRule gauss_legendre(int n);

// Affine image of a rule on [lo, hi].
GaussRule map_rule(const GaussRule& rule, double lo, double hi);

// Composite integration of f over [lo, hi] with panels geometrically graded
// toward `sing` (one endpoint), for integrands with an integrable endpoint
// singularity. `levels` geometric halvings, `pts` Gauss points per panel.
double graded_integrate(const std::function<double(double)>& f, double lo, double hi,
                        double sing, int levels = 45, int pts = 16);

}  // namespace loglap
