#include "loglap/closed_forms.hpp"

#include <cmath>

#include "loglap/polynomials.hpp"

namespace loglap {

double OracleSpectrum::eigenvalue(int level) const {
    if (level == 0) return 0.0;
    switch (family) {
        case Family::shift:
            return 1.0 + (1.0 - 1.0 / N) * (level - 1);
        case Family::interval:
            return 2.0 * harmonic_number(level);
        case Family::circle:
            return circle_eigenvalue_closed_form(level);
    }
    return 0.0;
}

double OracleSpectrum::multiplicity(int level) const {
    if (level == 0) return 1.0;
    switch (family) {
        case Family::shift:
            return std::pow(static_cast<double>(N), level - 1) * (N - 1);
        case Family::interval:
            return 1.0;
        case Family::circle:
            return 2.0;
    }
    return 0.0;
}

double OracleSpectrum::t0_exact() const {
    switch (family) {
        case Family::shift:
            return N * std::log(static_cast<double>(N)) / (N - 1);
        case Family::interval:
        case Family::circle:
            return 0.5;
    }
    return 0.0;
}

SpectralModel OracleSpectrum::to_model() const {
    SpectralModel model;
    model.source = SpectrumSource::closed_form;
    for (int level = 0; level < level_count(); ++level) {
        model.eigenvalues.push_back(eigenvalue(level));
        model.multiplicities.push_back(static_cast<int>(multiplicity(level)));
    }
    // eigenvectors are the oracle basis itself: identity coefficients
    auto total = static_cast<Eigen::Index>(model.eigenvalues.size());
    model.eigenvectors = Eigen::MatrixXd::Identity(total, total);
    return model;
}

std::vector<double> OracleSpectrum::expanded(std::size_t count) const {
    std::vector<double> out;
    out.reserve(count);
    OracleSpectrum unbounded = *this;
    int level = 0;
    while (out.size() < count) {
        double lam = unbounded.eigenvalue(level);
        auto mult = static_cast<long long>(unbounded.multiplicity(level));
        for (long long k = 0; k < mult && out.size() < count; ++k) out.push_back(lam);
        ++level;
    }
    return out;
}

OracleSpectrum shift_oracle(int N, int max_level) {
    if (N < 2) throw ParameterDomainError("shift_oracle: N must be >= 2");
    if (max_level < 0) throw ParameterDomainError("shift_oracle: max_level >= 0");
    OracleSpectrum o;
    o.family = OracleSpectrum::Family::shift;
    o.N = N;
    o.max_level = max_level;
    return o;
}

OracleSpectrum interval_oracle(int max_degree) {
    if (max_degree < 1) throw ParameterDomainError("interval_oracle: max_degree >= 1");
    OracleSpectrum o;
    o.family = OracleSpectrum::Family::interval;
    o.max_level = max_degree;
    return o;
}

OracleSpectrum circle_oracle(int max_freq) {
    if (max_freq < 1) throw ParameterDomainError("circle_oracle: max_freq >= 1");
    OracleSpectrum o;
    o.family = OracleSpectrum::Family::circle;
    o.max_level = max_freq;
    return o;
}

SpectralModel shift_spectrum(int N, int max_level) {
    return shift_oracle(N, max_level).to_model();
}

SpectralModel interval_spectrum(int max_degree) {
    return interval_oracle(max_degree).to_model();
}

double circle_eigenvalue_quadrature(int k, int quad_nodes) {
    // lam_k = int_0^2pi (1 - cos ku)/(2 sin(u/2)) du = 2 int_0^pi sin(ku/2)^2/sin(u/2) du;
    // the integrand is analytic on [0, pi], panels sized to the oscillation
    int panels = std::max({4, quad_nodes / 12, (2 * k) / 3});
    GaussRule base = gauss_legendre(12);
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        GaussRule panel = map_rule(base, M_PI * p / panels, M_PI * (p + 1) / panels);
        for (int i = 0; i < 12; ++i) {
            double u = panel.nodes[i];
            double s = std::sin(0.5 * k * u);
            acc += panel.weights[i] * (s * s) / std::sin(0.5 * u);
        }
    }
    return 2.0 * acc;
}

double circle_eigenvalue_closed_form(int k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += 1.0 / (2.0 * j - 1.0);
    return 4.0 * s;
}

CircleSpectrumResult circle_spectrum(int max_freq, int quad_nodes) {
    if (max_freq < 1) throw ParameterDomainError("circle_spectrum: max_freq >= 1");
    if (quad_nodes < 4) throw ParameterDomainError("circle_spectrum: quad_nodes >= 4");
    CircleSpectrumResult result;
    result.under_resolved = quad_nodes < 8 * max_freq;
    SpectralModel& model = result.model;
    model.source = SpectrumSource::closed_form;
    model.eigenvalues.push_back(0.0);
    model.multiplicities.push_back(1);
    for (int k = 1; k <= max_freq; ++k) {
        model.eigenvalues.push_back(circle_eigenvalue_quadrature(k, quad_nodes));
        model.multiplicities.push_back(2);
    }
    auto total = static_cast<Eigen::Index>(model.eigenvalues.size());
    model.eigenvectors = Eigen::MatrixXd::Identity(total, total);
    return result;
}

}  // namespace loglap
