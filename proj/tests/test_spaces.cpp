#include <doctest.h>

#include <cmath>
#include <random>

#include "loglap/space.hpp"

using namespace loglap;

TEST_CASE("shift space construction") {
    Space s = make_shift_space(2, 2.0, 3);
    CHECK(s.node_count() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(s.weight(i) == doctest::Approx(0.125));
    CHECK(s.delta == doctest::Approx(1.0));
    CHECK(s.diam == 1.0);

    Space half = make_shift_space(2, 4.0, 1);
    CHECK(half.delta == doctest::Approx(0.5));

    CHECK_THROWS_AS(make_shift_space(1, 2.0, 3), ParameterDomainError);
    CHECK_THROWS_AS(make_shift_space(2, 1.0, 3), ParameterDomainError);
    CHECK_THROWS_AS(make_shift_space(2, 2.0, 0), ParameterDomainError);
}

TEST_CASE("interval space construction") {
    Space s = make_interval_space(-1.0, 1.0, 64);
    CHECK(s.quadrature.weights.sum() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.diam == doctest::Approx(2.0));

    Space unit = make_interval_space(0.0, 1.0, 32);
    CHECK(unit.diam == doctest::Approx(1.0));

    CHECK_THROWS_AS(make_interval_space(1.0, 1.0, 32), ParameterDomainError);
    CHECK_THROWS_AS(make_interval_space(0.0, 1.0, 1), ParameterDomainError);
}

TEST_CASE("circle space construction") {
    Space s = make_circle_space(8);
    CHECK(s.quadrature.weights.sum() == doctest::Approx(2 * M_PI).epsilon(1e-12));
    CHECK(distance(s, Point::angle(0.0), Point::angle(M_PI)) == doctest::Approx(2.0));
    CHECK(distance(s, Point::angle(0.0), Point::angle(M_PI / 2)) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(make_circle_space(3), ParameterDomainError);
}

TEST_CASE("quadrature mass at every refinement level") {
    for (int depth : {1, 4, 8})
        CHECK(make_shift_space(2, 2.0, depth).quadrature.weights.sum() ==
              doctest::Approx(1.0).epsilon(1e-12));
    for (int n : {16, 256, 1024})
        CHECK(make_interval_space(0.0, 3.0, n).quadrature.weights.sum() ==
              doctest::Approx(3.0).epsilon(1e-12));
    for (int n : {8, 128})
        CHECK(make_circle_space(n).quadrature.weights.sum() ==
              doctest::Approx(2 * M_PI).epsilon(1e-12));
}

TEST_CASE("distance on words") {
    Space s = make_shift_space(2, 2.0, 4);
    Point p = Point::word_point({1, 2, 2, 2});
    Point q = Point::word_point({1, 2, 1, 1});
    CHECK(distance(s, p, q) == doctest::Approx(0.25));  // first difference at k = 3
    CHECK(distance(s, p, p) == 0.0);
    CHECK_THROWS_AS(distance(s, p, Point::coordinate(0.5)), TypeError);
    CHECK_THROWS_AS(distance(s, p, Point::word_point({1, 2})), TypeError);
}

TEST_CASE("interval distance") {
    Space s = make_interval_space(0.0, 1.0, 16);
    CHECK(distance(s, Point::coordinate(0.25), Point::coordinate(0.75)) ==
          doctest::Approx(0.5));
}

TEST_CASE("distance axioms on sampled pairs") {
    std::mt19937_64 rng(7);
    Space shift = make_shift_space(3, 2.0, 5);
    Space circle = make_circle_space(64);
    for (const Space* s : {&shift, &circle}) {
        std::uniform_int_distribution<std::size_t> pick(0, s->node_count() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const Point& x = s->node(pick(rng));
            const Point& y = s->node(pick(rng));
            const Point& z = s->node(pick(rng));
            double dxy = distance(*s, x, y);
            CHECK(dxy == doctest::Approx(distance(*s, y, x)));
            CHECK(distance(*s, x, z) <= dxy + distance(*s, y, z) + 1e-12);
        }
    }
    std::uniform_int_distribution<std::size_t> pick(0, shift.node_count() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const Point& x = shift.node(pick(rng));
        const Point& y = shift.node(pick(rng));
        const Point& z = shift.node(pick(rng));
        // ultrametric inequality
        CHECK(distance(shift, x, z) <=
              std::max(distance(shift, x, y), distance(shift, y, z)) + 1e-15);
    }
}

TEST_CASE("ball measures") {
    Space shift = make_shift_space(2, 2.0, 5);
    for (int n = 1; n <= 4; ++n)
        CHECK(ball_measure(shift, shift.node(3), std::pow(2.0, -n)) ==
              doctest::Approx(std::pow(2.0, -n)));

    Space interval = make_interval_space(-1.0, 1.0, 16);
    CHECK(ball_measure(interval, Point::coordinate(0.0), 0.5) == doctest::Approx(1.0));
    CHECK(ball_measure(interval, Point::coordinate(-1.0), 0.5) == doctest::Approx(0.5));

    Space circle = make_circle_space(16);
    CHECK(ball_measure(circle, Point::angle(1.0), 2.0) == doctest::Approx(2 * M_PI));
    double exact = ball_measure(circle, circle.node(0), 0.7);
    double quad = ball_measure(circle, circle.node(0), 0.7, true);
    CHECK(std::abs(exact - quad) < 2 * (2 * M_PI / 16));
}

TEST_CASE("verify_ahlfors catalog bounds") {
    Space interval = make_interval_space(-1.0, 1.0, 256);
    RegularityReport rep = verify_ahlfors(interval, 64, {0.1, 0.5});
    CHECK(rep.estimated_C <= 2.0 + 1e-9);
    CHECK(rep.estimated_C >= 1.0);
    for (std::size_t i = 0; i < rep.radii.size(); ++i)
        CHECK(rep.min_ratio[i] <= rep.max_ratio[i]);

    Space shift = make_shift_space(2, 2.0, 6);
    RegularityReport srep = verify_ahlfors(shift, 32, {0.5, 0.25, 0.125});
    CHECK(srep.estimated_C == doctest::Approx(1.0));  // exact at dyadic radii

    Space circle = make_circle_space(128);
    RegularityReport crep = verify_ahlfors(circle, 16, {0.1});
    CHECK(crep.min_ratio[0] >= 2.0 - 1e-9);
    CHECK(crep.max_ratio[0] <= M_PI + 1e-9);

    CHECK_THROWS_AS(verify_ahlfors(interval, 4, {3.0}), ParameterDomainError);
}

TEST_CASE("covering numbers") {
    Space shift = make_shift_space(2, 2.0, 5);
    CHECK(covering_number(shift, 0.125) == 8);  // depth-3 cylinders tile X
    CHECK(covering_number(shift, 0.25) == 4);
    CHECK(covering_number(shift, 1.0) == 1);

    Space interval = make_interval_space(0.0, 1.0, 64);
    CHECK(covering_number(interval, 0.5) <= 2);
    CHECK(covering_number(interval, 1.0) == 1);

    CHECK_THROWS_AS(covering_number(interval, 0.0), ParameterDomainError);
    CHECK_THROWS_AS(covering_number(interval, -0.5), ParameterDomainError);
}

TEST_CASE("covering is exact at the natural shift scales") {
    Space shift = make_shift_space(3, 3.0, 4);
    for (int n = 1; n <= 3; ++n)
        CHECK(covering_number(shift, std::pow(3.0, -n)) ==
              static_cast<int>(std::pow(3.0, n)));
}
