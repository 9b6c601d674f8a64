#include "loglap/basis.hpp"

#include <cmath>

#include "loglap/polynomials.hpp"

namespace loglap {

namespace {

void require_kind(const Space& space, SpaceKind kind, const char* what) {
    if (space.kind != kind)
        throw TypeError(std::string(what) + ": space kind must be " + to_string(kind));
}

// index of the level-m cylinder containing a word (lexicographic)
std::size_t prefix_index(const std::vector<int>& word, int level, int N) {
    std::size_t idx = 0;
    for (int k = 0; k < level; ++k) idx = idx * static_cast<std::size_t>(N) + (word[k] - 1);
    return idx;
}

// Helmert vector k (1-based) over N children: (1,...,1,-k,0,...,0) with k ones.
double helmert_entry(int k, int child) {  // child 0-based
    if (child < k) return 1.0;
    if (child == k) return -static_cast<double>(k);
    return 0.0;
}

}  // namespace

BasisSet nodal_basis(const Space& space) {
    BasisSet b;
    b.name = "nodal";
    auto n = static_cast<Eigen::Index>(space.node_count());
    b.values = Eigen::MatrixXd::Identity(n, n);
    b.orthonormal = false;
    return b;
}

BasisSet cylinder_basis(const Space& space, int level) {
    require_kind(space, SpaceKind::shift, "cylinder_basis");
    if (level < 0 || level > space.depth)
        throw ParameterDomainError("cylinder_basis: level must lie in [0, depth]");
    auto n = static_cast<Eigen::Index>(space.node_count());
    auto m = static_cast<Eigen::Index>(std::pow(static_cast<double>(space.N), level));
    BasisSet b;
    b.name = "cylinder-indicators";
    b.values = Eigen::MatrixXd::Zero(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        auto c = prefix_index(space.node(static_cast<std::size_t>(i)).word, level, space.N);
        b.values(i, static_cast<Eigen::Index>(c)) = 1.0;
    }
    b.orthonormal = false;
    return b;
}

BasisSet haar_wavelets(int N, int level, int depth) {
    if (N < 2) throw ParameterDomainError("haar_wavelets: N must be >= 2");
    if (level < 0) throw ParameterDomainError("haar_wavelets: level must be >= 0");
    if (level >= depth) throw ParameterDomainError("haar_wavelets: need level < depth");

    auto n_nodes = static_cast<std::size_t>(std::pow(static_cast<double>(N), depth));
    auto n_cyl = static_cast<std::size_t>(std::pow(static_cast<double>(N), level));
    BasisSet b;
    b.name = "haar";
    b.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_nodes),
                                     static_cast<Eigen::Index>(n_cyl * (N - 1)));
    // nodes are lexicographic, so node i lies in level-m cylinder i / N^(depth-m)
    auto per_cyl = static_cast<std::size_t>(std::pow(static_cast<double>(N), depth - level));
    auto per_child = per_cyl / static_cast<std::size_t>(N);
    // L2 normalization: child cylinders have measure N^-(level+1)
    double scale = std::pow(static_cast<double>(N), 0.5 * (level + 1));
    for (std::size_t c = 0; c < n_cyl; ++c) {
        for (int k = 1; k < N; ++k) {
            double norm = std::sqrt(static_cast<double>(k) + static_cast<double>(k) * k);
            auto col = static_cast<Eigen::Index>(c * (N - 1) + (k - 1));
            for (int child = 0; child < N; ++child) {
                double v = helmert_entry(k, child) / norm * scale;
                if (v == 0.0) continue;
                std::size_t start = c * per_cyl + static_cast<std::size_t>(child) * per_child;
                for (std::size_t i = 0; i < per_child; ++i)
                    b.values(static_cast<Eigen::Index>(start + i), col) = v;
            }
        }
    }
    b.orthonormal = true;
    return b;
}

BasisSet haar_basis(const Space& space, int max_level) {
    require_kind(space, SpaceKind::shift, "haar_basis");
    if (max_level < 0 || max_level >= space.depth)
        throw ParameterDomainError("haar_basis: need 0 <= max_level < depth");
    auto n = static_cast<Eigen::Index>(space.node_count());
    Eigen::Index cols = 1;
    for (int lvl = 0; lvl <= max_level; ++lvl)
        cols += static_cast<Eigen::Index>(std::pow(static_cast<double>(space.N), lvl)) *
                (space.N - 1);
    BasisSet b;
    b.name = "haar";
    b.values = Eigen::MatrixXd::Zero(n, cols);
    b.values.col(0).setConstant(1.0);  // unit constant: mu(X) = 1
    Eigen::Index at = 1;
    for (int lvl = 0; lvl <= max_level; ++lvl) {
        BasisSet w = haar_wavelets(space.N, lvl, space.depth);
        b.values.middleCols(at, w.values.cols()) = w.values;
        at += w.values.cols();
    }
    b.orthonormal = true;
    return b;
}

Eigen::MatrixXi haar_basis_unnormalized(int N, int max_level, int depth) {
    if (N < 2 || max_level < 0 || max_level >= depth)
        throw ParameterDomainError("haar_basis_unnormalized: bad parameters");
    auto n = static_cast<Eigen::Index>(std::pow(static_cast<double>(N), depth));
    Eigen::Index cols = 1;
    for (int lvl = 0; lvl <= max_level; ++lvl)
        cols += static_cast<Eigen::Index>(std::pow(static_cast<double>(N), lvl)) * (N - 1);
    Eigen::MatrixXi B = Eigen::MatrixXi::Zero(n, cols);
    B.col(0).setConstant(1);
    Eigen::Index at = 1;
    for (int lvl = 0; lvl <= max_level; ++lvl) {
        auto n_cyl = static_cast<std::size_t>(std::pow(static_cast<double>(N), lvl));
        auto per_cyl = static_cast<std::size_t>(std::pow(static_cast<double>(N), depth - lvl));
        auto per_child = per_cyl / static_cast<std::size_t>(N);
        for (std::size_t c = 0; c < n_cyl; ++c) {
            for (int k = 1; k < N; ++k) {
                Eigen::Index col = at + static_cast<Eigen::Index>(c * (N - 1) + (k - 1));
                for (int child = 0; child < N; ++child) {
                    int v = (child < k) ? 1 : (child == k ? -k : 0);
                    if (v == 0) continue;
                    std::size_t start = c * per_cyl + static_cast<std::size_t>(child) * per_child;
                    for (std::size_t i = 0; i < per_child; ++i)
                        B(static_cast<Eigen::Index>(start + i), col) = v;
                }
            }
        }
        at += static_cast<Eigen::Index>(n_cyl) * (N - 1);
    }
    return B;
}

BasisSet legendre_basis(const Space& space, int max_degree) {
    require_kind(space, SpaceKind::interval, "legendre_basis");
    if (max_degree < 0) throw ParameterDomainError("legendre_basis: max_degree >= 0");
    auto n = static_cast<Eigen::Index>(space.node_count());
    BasisSet b;
    b.name = "legendre";
    b.values.resize(n, max_degree + 1);
    double len = space.b - space.a;
    for (Eigen::Index i = 0; i < n; ++i) {
        double t = 2.0 * (space.node(static_cast<std::size_t>(i)).value - space.a) / len - 1.0;
        for (int d = 0; d <= max_degree; ++d)
            b.values(i, d) = legendre_value(d, t) * std::sqrt((2.0 * d + 1.0) / len);
    }
    b.orthonormal = true;
    return b;
}

BasisSet fourier_basis(const Space& space, int max_freq) {
    require_kind(space, SpaceKind::circle, "fourier_basis");
    if (max_freq < 0) throw ParameterDomainError("fourier_basis: max_freq >= 0");
    auto n = static_cast<Eigen::Index>(space.node_count());
    BasisSet b;
    b.name = "fourier";
    b.values.resize(n, 2 * max_freq + 1);
    double c0 = 1.0 / std::sqrt(2.0 * M_PI);
    double c1 = 1.0 / std::sqrt(M_PI);
    for (Eigen::Index i = 0; i < n; ++i) {
        double t = space.node(static_cast<std::size_t>(i)).value;
        b.values(i, 0) = c0;
        for (int k = 1; k <= max_freq; ++k) {
            b.values(i, 2 * k - 1) = c1 * std::cos(k * t);
            b.values(i, 2 * k) = c1 * std::sin(k * t);
        }
    }
    b.orthonormal = true;
    return b;
}

}  // namespace loglap
