#pragma once

#include <vector>

#include <Eigen/Core>

#include "loglap/errors.hpp"

namespace loglap {

enum class SpaceKind { shift, interval, circle };

const char* to_string(SpaceKind kind);

// A point of one of the catalog spaces: a truncated word over {1..N}, a
// coordinate in [a,b], or an angle in [0, 2pi).
struct Point {
    SpaceKind kind = SpaceKind::interval;
    std::vector<int> word;  // shift only, symbols in 1..N
    double value = 0.0;     // coordinate or angle

    static Point word_point(std::vector<int> symbols);
    static Point coordinate(double x);
    static Point angle(double theta);  // reduced mod 2pi
};

// Discretization of mu: nodes with nonnegative weights summing to mu(X).
struct QuadratureScheme {
    std::vector<Point> nodes;
    Eigen::VectorXd weights;
    int level = 0;  // refinement parameter (depth or node count)

    std::size_t size() const { return nodes.size(); }
};

// Ahlfors regular metric-measure space with an attached quadrature scheme.
// Immutable after construction; all operations on it are pure.
struct Space {
    SpaceKind kind = SpaceKind::interval;
    double delta = 1.0;                // Ahlfors dimension
    double diam = 0.0;                 // diameter
    double regularity_constant = 1.0;  // documented C with C^-1 r^d <= mu(B) <= C r^d
    double total_mass = 0.0;           // mu(X)
    QuadratureScheme quadrature;

    // shift parameters
    int N = 0;
    double lambda = 0.0;
    int depth = 0;

    // interval parameters
    double a = 0.0;
    double b = 0.0;

    std::size_t node_count() const { return quadrature.size(); }
    double weight(std::size_t i) const { return quadrature.weights[static_cast<Eigen::Index>(i)]; }
    const Point& node(std::size_t i) const { return quadrature.nodes[i]; }
};

struct RegularityReport {
    double estimated_C = 1.0;
    std::vector<double> radii;
    std::vector<double> min_ratio;  // per radius, min over centers of mu(B(x,r))/r^delta
    std::vector<double> max_ratio;
    int sample_count = 0;
};

// Full N-shift truncated at `depth`: nodes are all N^depth words, each of
// weight N^-depth; d(x,y) = lambda^-(k-1) with k the first differing index,
// delta = log N / log lambda, diam = 1.
Space make_shift_space(int N, double lambda, int depth);

// [a,b] with the Euclidean metric and Lebesgue measure, Gauss-Legendre nodes.
Space make_interval_space(double a, double b, int nodes);

// Unit circle with the chordal metric d = 2|sin((t-s)/2)| and arclength
// measure, equispaced nodes of weight 2pi/nodes.
Space make_circle_space(int nodes);

double distance(const Space& space, const Point& p, const Point& q);
double node_distance(const Space& space, std::size_t i, std::size_t j);

// Closed-ball measure mu(B(x,r)) in closed form (cylinder measure, overlap
// length, arc length). Set `quadrature_fallback` to sum node weights instead;
// closed forms keep regularity reports free of quadrature noise.
double ball_measure(const Space& space, const Point& center, double r,
                    bool quadrature_fallback = false);

RegularityReport verify_ahlfors(const Space& space, int sample_count,
                                const std::vector<double>& radii);

// Size of a greedy cover by closed balls of the given radius,
// farthest-point traversal over quadrature nodes in node order.
int covering_number(const Space& space, double radius);

}  // namespace loglap
