#include "loglap/polynomials.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace loglap {

double legendre_value(int n, double x) {
    if (n == 0) return 1.0;
    if (n == 1) return x;
    double pm2 = 1.0, pm1 = x;
    for (int k = 2; k <= n; ++k) {
        double p = ((2.0 * k - 1.0) * x * pm1 - (k - 1.0) * pm2) / k;
        pm2 = pm1;
        pm1 = p;
    }
    return pm1;
}

double legendre_derivative(int n, double x) {
    if (n == 0) return 0.0;
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    double denom = x * x - 1.0;
    if (std::abs(denom) < 1e-12) {
        // endpoint value n(n+1)/2 * sign pattern
        double v = 0.5 * n * (n + 1);
        return (x > 0) ? v : ((n % 2 == 0) ? -v : v);
    }
    return n * (x * legendre_value(n, x) - legendre_value(n - 1, x)) / denom;
}

double harmonic_number(int n) {
    double h = 0.0;
    for (int k = 1; k <= n; ++k) h += 1.0 / k;
    return h;
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p = legendre_value(n, x);
            double dp = legendre_derivative(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double dp = legendre_derivative(n, x);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

GaussRule map_rule(const GaussRule& rule, double lo, double hi) {
    GaussRule out;
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    out.nodes = (rule.nodes.array() * half + mid).matrix();
    out.weights = rule.weights * half;
    return out;
}

double graded_integrate(const std::function<double(double)>& f, double lo, double hi,
                        double sing, int levels, int pts) {
    GaussRule base = gauss_legendre(pts);
    double total = 0.0;
    bool sing_at_lo = std::abs(sing - lo) < std::abs(sing - hi);
    double width = hi - lo;
    // panels [sing + w/2^{j+1}, sing + w/2^j] marching toward the singular end
    for (int j = 0; j < levels; ++j) {
        double outer = width * std::pow(0.5, j);
        double inner = width * std::pow(0.5, j + 1);
        double plo = sing_at_lo ? lo + inner : hi - outer;
        double phi = sing_at_lo ? lo + outer : hi - inner;
        GaussRule panel = map_rule(base, plo, phi);
        for (int i = 0; i < pts; ++i) total += panel.weights[i] * f(panel.nodes[i]);
    }
    return total;
}

}  // namespace loglap
