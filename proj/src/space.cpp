#include "loglap/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loglap/polynomials.hpp"

namespace loglap {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double reduce_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

// first 1-based index where the words differ, or 0 if equal
int first_difference(const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != v[k]) return static_cast<int>(k) + 1;
    return 0;
}

}  // namespace

const char* to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::shift: return "shift";
        case SpaceKind::interval: return "interval";
        case SpaceKind::circle: return "circle";
    }
    return "?";
}

Point Point::word_point(std::vector<int> symbols) {
    Point p;
    p.kind = SpaceKind::shift;
    p.word = std::move(symbols);
    return p;
}

Point Point::coordinate(double x) {
    Point p;
    p.kind = SpaceKind::interval;
    p.value = x;
    return p;
}

Point Point::angle(double theta) {
    Point p;
    p.kind = SpaceKind::circle;
    p.value = reduce_angle(theta);
    return p;
}

Space make_shift_space(int N, double lambda, int depth) {
    if (N < 2) throw ParameterDomainError("make_shift_space: alphabet size N must be >= 2");
    if (!(lambda > 1.0)) throw ParameterDomainError("make_shift_space: lambda must be > 1");
    if (depth < 1) throw ParameterDomainError("make_shift_space: depth must be >= 1");
    double count = std::pow(static_cast<double>(N), depth);
    if (count > 1 << 22)
        throw ParameterDomainError("make_shift_space: N^depth exceeds the supported node count");

    Space s;
    s.kind = SpaceKind::shift;
    s.N = N;
    s.lambda = lambda;
    s.depth = depth;
    s.delta = std::log(static_cast<double>(N)) / std::log(lambda);
    s.diam = 1.0;
    s.regularity_constant = static_cast<double>(N);  // ratio is 1 exactly at radii lambda^-n
    s.total_mass = 1.0;

    auto n_nodes = static_cast<std::size_t>(count);
    s.quadrature.nodes.reserve(n_nodes);
    s.quadrature.weights.resize(static_cast<Eigen::Index>(n_nodes));
    s.quadrature.level = depth;
    double w = 1.0 / count;
    std::vector<int> word(depth, 1);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        s.quadrature.nodes.push_back(Point::word_point(word));
        s.quadrature.weights[static_cast<Eigen::Index>(i)] = w;
        // lexicographic increment
        for (int k = depth - 1; k >= 0; --k) {
            if (word[k] < N) {
                ++word[k];
                break;
            }
            word[k] = 1;
        }
    }
    return s;
}

Space make_interval_space(double a, double b, int nodes) {
    if (!(b > a)) throw ParameterDomainError("make_interval_space: need b > a");
    if (nodes < 2) throw ParameterDomainError("make_interval_space: need at least 2 nodes");

    Space s;
    s.kind = SpaceKind::interval;
    s.a = a;
    s.b = b;
    s.delta = 1.0;
    s.diam = b - a;
    s.regularity_constant = 2.0;
    s.total_mass = b - a;

    GaussRule rule = map_rule(gauss_legendre(nodes), a, b);
    s.quadrature.level = nodes;
    s.quadrature.weights = rule.weights;
    s.quadrature.nodes.reserve(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
        s.quadrature.nodes.push_back(Point::coordinate(rule.nodes[i]));
    return s;
}

Space make_circle_space(int nodes) {
    if (nodes < 4) throw ParameterDomainError("make_circle_space: need at least 4 nodes");

    Space s;
    s.kind = SpaceKind::circle;
    s.delta = 1.0;
    s.diam = 2.0;
    s.regularity_constant = M_PI;  // arc/chord ratio lies in [2, pi]
    s.total_mass = kTwoPi;

    s.quadrature.level = nodes;
    s.quadrature.weights = Eigen::VectorXd::Constant(nodes, kTwoPi / nodes);
    s.quadrature.nodes.reserve(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
        s.quadrature.nodes.push_back(Point::angle(kTwoPi * i / nodes));
    return s;
}

double distance(const Space& space, const Point& p, const Point& q) {
    if (p.kind != space.kind || q.kind != space.kind)
        throw TypeError("distance: point kind does not match the space");
    switch (space.kind) {
        case SpaceKind::shift: {
            if (p.word.size() != q.word.size())
                throw TypeError("distance: shift words must have equal length");
            int k = first_difference(p.word, q.word);
            if (k == 0) return 0.0;
            return std::pow(space.lambda, -(k - 1));
        }
        case SpaceKind::interval:
            return std::abs(p.value - q.value);
        case SpaceKind::circle:
            return 2.0 * std::abs(std::sin(0.5 * (p.value - q.value)));
    }
    return 0.0;
}

double node_distance(const Space& space, std::size_t i, std::size_t j) {
    return distance(space, space.node(i), space.node(j));
}

double ball_measure(const Space& space, const Point& center, double r,
                    bool quadrature_fallback) {
    if (!(r > 0)) throw ParameterDomainError("ball_measure: radius must be positive");
    if (center.kind != space.kind) throw TypeError("ball_measure: point kind mismatch");
    if (quadrature_fallback) {
        double m = 0.0;
        for (std::size_t i = 0; i < space.node_count(); ++i)
            if (distance(space, center, space.node(i)) <= r) m += space.weight(i);
        return m;
    }
    switch (space.kind) {
        case SpaceKind::shift: {
            if (r >= 1.0) return 1.0;
            // smallest m with lambda^-m <= r; closed ball is the cylinder of length m
            int m = 0;
            double scale = 1.0;
            while (scale > r && m <= space.depth) {
                scale /= space.lambda;
                ++m;
            }
            if (m > space.depth) m = space.depth;  // atoms are depth-truncated
            return std::pow(static_cast<double>(space.N), -m);
        }
        case SpaceKind::interval: {
            double lo = std::max(center.value - r, space.a);
            double hi = std::min(center.value + r, space.b);
            return std::max(hi - lo, 0.0);
        }
        case SpaceKind::circle: {
            if (r >= 2.0) return kTwoPi;
            return 4.0 * std::asin(0.5 * r);
        }
    }
    return 0.0;
}

RegularityReport verify_ahlfors(const Space& space, int sample_count,
                                const std::vector<double>& radii) {
    if (sample_count < 1) throw ParameterDomainError("verify_ahlfors: sample_count >= 1");
    for (double r : radii)
        if (!(r > 0) || r > space.diam)
            throw ParameterDomainError("verify_ahlfors: radii must lie in (0, diam]");

    RegularityReport rep;
    rep.radii = radii;
    rep.sample_count = std::min<int>(sample_count, static_cast<int>(space.node_count()));
    double worst = 1.0;
    for (double r : radii) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (int s = 0; s < rep.sample_count; ++s) {
            std::size_t idx = static_cast<std::size_t>(
                (static_cast<long long>(s) * space.node_count()) / rep.sample_count);
            double ratio = ball_measure(space, space.node(idx), r) / std::pow(r, space.delta);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        rep.min_ratio.push_back(lo);
        rep.max_ratio.push_back(hi);
        worst = std::max({worst, hi, 1.0 / lo});
    }
    rep.estimated_C = worst;
    return rep;
}

int covering_number(const Space& space, double radius) {
    if (!(radius > 0)) throw ParameterDomainError("covering_number: radius must be positive");
    if (radius > space.diam)
        throw ParameterDomainError("covering_number: radius must be <= diam");

    std::size_t n = space.node_count();
    std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
    std::size_t next = 0;  // start from the first node
    int count = 0;
    while (true) {
        ++count;
        for (std::size_t i = 0; i < n; ++i)
            min_dist[i] = std::min(min_dist[i], node_distance(space, next, i));
        double far = 0.0;
        std::size_t far_idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (min_dist[i] > far) {
                far = min_dist[i];
                far_idx = i;
            }
        }
        if (far <= radius) break;
        next = far_idx;
    }
    return count;
}

}  // namespace loglap
