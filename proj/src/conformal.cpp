#include "loglap/conformal.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "loglap/basis.hpp"
#include "loglap/closed_forms.hpp"
#include "loglap/polynomials.hpp"

namespace loglap {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
using Complex = std::complex<double>;

double reduce_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

// largest singular value of a complex matrix via A^H A
double spectral_norm(const Eigen::MatrixXcd& A) {
    Eigen::MatrixXcd G = A.adjoint() * A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

MobiusMap::MobiusMap(Complex a_, double rotation_) : a(a_), rotation(rotation_) {
    if (!(std::abs(a) < 1.0))
        throw ParameterDomainError("MobiusMap: |a| must be < 1");
}

Complex MobiusMap::apply(Complex z) const {
    return std::exp(Complex(0, rotation)) * (z - a) / (1.0 - std::conj(a) * z);
}

double MobiusMap::derivative_at(double theta) const {
    Complex z = std::exp(Complex(0, theta));
    double denom = std::norm(1.0 - std::conj(a) * z);
    return (1.0 - std::norm(a)) / denom;
}

MobiusMap MobiusMap::inverse() const {
    // gamma^-1(w) = e^{-i rot} (w + a e^{i rot}) / (1 + conj(a) e^{-i rot} w)
    return MobiusMap(-a * std::exp(Complex(0, rotation)), -rotation);
}

MobiusImage mobius_evaluate(const MobiusMap& map, double theta) {
    Complex w = map.apply(std::exp(Complex(0, theta)));
    MobiusImage image;
    image.theta_prime = reduce_angle(std::arg(w));
    image.deriv = map.derivative_at(theta);
    return image;
}

double conformal_identity_defect(const MobiusMap& map, int samples) {
    if (samples < 2) throw ParameterDomainError("conformal_identity_defect: samples >= 2");
    double defect = 0.0;
    for (int i = 0; i < samples; ++i) {
        double x = kTwoPi * i / samples + 0.05;  // offset avoids exact symmetry pairs
        MobiusImage gx = mobius_evaluate(map, x);
        for (int j = i + 1; j < samples; ++j) {
            double y = kTwoPi * j / samples + 0.05;
            MobiusImage gy = mobius_evaluate(map, y);
            double lhs = 2.0 * std::abs(std::sin(0.5 * (gx.theta_prime - gy.theta_prime)));
            double rhs = std::sqrt(gx.deriv * gy.deriv) * 2.0 *
                         std::abs(std::sin(0.5 * (x - y)));
            defect = std::max(defect, std::abs(lhs - rhs));
        }
    }
    return defect;
}

UnitaryMatrixResult unitary_matrix(const MobiusMap& map, int max_freq, int quad_nodes) {
    if (max_freq < 0) throw ParameterDomainError("unitary_matrix: max_freq >= 0");
    if (quad_nodes < 4) throw ParameterDomainError("unitary_matrix: quad_nodes >= 4");
    UnitaryMatrixResult result;
    result.under_resolved = quad_nodes < 8 * max_freq;

    Space circle = make_circle_space(quad_nodes);
    BasisSet basis = fourier_basis(circle, max_freq);
    MobiusMap inv = map.inverse();

    auto n = static_cast<Eigen::Index>(quad_nodes);
    auto m = static_cast<Eigen::Index>(2 * max_freq + 1);
    Eigen::MatrixXd V(n, m);
    double c0 = 1.0 / std::sqrt(kTwoPi);
    double c1 = 1.0 / std::sqrt(M_PI);
    for (Eigen::Index i = 0; i < n; ++i) {
        double theta = circle.node(static_cast<std::size_t>(i)).value;
        MobiusImage pre = mobius_evaluate(inv, theta);
        double amp = std::sqrt(pre.deriv);  // |(gamma^-1)'|^{1/2}, n = 1
        V(i, 0) = amp * c0;
        for (int k = 1; k <= max_freq; ++k) {
            V(i, 2 * k - 1) = amp * c1 * std::cos(k * pre.theta_prime);
            V(i, 2 * k) = amp * c1 * std::sin(k * pre.theta_prime);
        }
    }
    result.transformed_values = V;

    Eigen::VectorXd w = circle.quadrature.weights;
    Eigen::MatrixXd M = basis.values.transpose() * w.asDiagonal() * basis.values;
    result.coeffs = basis.values.transpose() * w.asDiagonal() * V;
    Eigen::MatrixXd gram = V.transpose() * w.asDiagonal() * V;
    result.unitarity_defect = (gram - M).cwiseAbs().maxCoeff();
    return result;
}

std::vector<double> fractional_circle_eigenvalues(int max_freq, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw ParameterDomainError("fractional_circle_eigenvalues: alpha in (0,1)");
    if (max_freq < 1) throw ParameterDomainError("fractional_circle_eigenvalues: max_freq >= 1");
    // lam_k = 2 int_0^pi 2 sin(ku/2)^2 / (2 sin(u/2))^(1+alpha) du; integrable
    // u^(1-alpha) singularity at 0 handled by geometric grading of the first
    // oscillation panel
    std::vector<double> lam(static_cast<std::size_t>(max_freq) + 1, 0.0);
    GaussRule base = gauss_legendre(12);
    for (int k = 1; k <= max_freq; ++k) {
        auto f = [&](double u) {
            double s = std::sin(0.5 * k * u);
            return 2.0 * s * s / std::pow(2.0 * std::sin(0.5 * u), 1.0 + alpha);
        };
        int panels = std::max(8, 4 * k);
        double first = M_PI / panels;
        double acc = graded_integrate(f, 0.0, first, 0.0, 50, 12);
        for (int p = 1; p < panels; ++p) {
            GaussRule panel = map_rule(base, M_PI * p / panels, M_PI * (p + 1) / panels);
            for (int i = 0; i < 12; ++i) acc += panel.weights[i] * f(panel.nodes[i]);
        }
        lam[static_cast<std::size_t>(k)] = 2.0 * acc;
    }
    return lam;
}

FractionalModel fractional_model(int max_freq, double alpha) {
    FractionalModel model;
    model.alpha = alpha;
    model.eigenvalues = fractional_circle_eigenvalues(max_freq, alpha);
    return model;
}

CommutatorGrowth commutator_growth(const MobiusMap& map, CommutatorKind kind, double alpha,
                                   const std::vector<int>& freq_list, int quad_nodes) {
    if (freq_list.empty()) throw ParameterDomainError("commutator_growth: empty freq_list");
    for (std::size_t i = 1; i < freq_list.size(); ++i)
        if (freq_list[i] <= freq_list[i - 1])
            throw ParameterDomainError("commutator_growth: freq_list must be increasing");
    int K = freq_list.back();
    if (quad_nodes <= 0) quad_nodes = std::max(1024, 16 * K);

    // diagonal eigenvalues
    std::vector<double> lam(static_cast<std::size_t>(K) + 1, 0.0);
    if (kind == CommutatorKind::log) {
        for (int k = 1; k <= K; ++k) lam[static_cast<std::size_t>(k)] =
            circle_eigenvalue_closed_form(k);
    } else {
        lam = fractional_circle_eigenvalues(K, alpha);
    }

    // matrix elements U_kj = <e_k, U(gamma) e_j> in the complex Fourier basis
    // via equispaced quadrature (spectrally accurate)
    MobiusMap inv = map.inverse();
    auto n = static_cast<Eigen::Index>(quad_nodes);
    auto m = static_cast<Eigen::Index>(2 * K + 1);
    Eigen::MatrixXcd G(n, m);  // columns: sqrt|ginv'| e^{i j ginv(theta)}
    Eigen::MatrixXcd E(n, m);  // columns: e^{i k theta}
    for (Eigen::Index p = 0; p < n; ++p) {
        double theta = kTwoPi * static_cast<double>(p) / quad_nodes;
        MobiusImage pre = mobius_evaluate(inv, theta);
        double amp = std::sqrt(pre.deriv);
        for (Eigen::Index c = 0; c < m; ++c) {
            int freq = static_cast<int>(c) - K;
            G(p, c) = amp * std::exp(Complex(0, freq * pre.theta_prime));
            E(p, c) = std::exp(Complex(0, freq * theta));
        }
    }
    Eigen::MatrixXcd U = (E.adjoint() * G) / static_cast<double>(quad_nodes);

    CommutatorGrowth growth;
    growth.freq_list = freq_list;
    for (int Kt : freq_list) {
        auto mt = static_cast<Eigen::Index>(2 * Kt + 1);
        Eigen::MatrixXcd C(mt, mt);
        for (Eigen::Index r = 0; r < mt; ++r) {
            int fr = std::abs(static_cast<int>(r) - Kt);
            for (Eigen::Index c = 0; c < mt; ++c) {
                int fc = std::abs(static_cast<int>(c) - Kt);
                Eigen::Index ur = r - Kt + K;
                Eigen::Index uc = c - Kt + K;
                C(r, c) = (lam[static_cast<std::size_t>(fr)] -
                           lam[static_cast<std::size_t>(fc)]) * U(ur, uc);
            }
        }
        growth.norms.push_back(spectral_norm(C));
    }
    double lo = *std::min_element(growth.norms.begin(), growth.norms.end());
    double hi = *std::max_element(growth.norms.begin(), growth.norms.end());
    bool growing = growth.norms.back() > 2.0 * growth.norms.front();
    if (lo <= 1e-12) growing = false;  // rotations and the identity commute
    growth.verdict = growing ? "growing-trend" : "bounded-trend";
    (void)hi;
    return growth;
}

}  // namespace loglap
