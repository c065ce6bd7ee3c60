#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "capax/domains.hpp"

using namespace capax;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("areas: simplex, box, circle quarter disk, kite polytope") {
    CHECK(area(Domain::simplex({1, 1})) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(area(Domain::simplex({1, 2, 3})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(area(Domain::box({1, 2})) == doctest::Approx(2.0).epsilon(1e-14));
    Domain circle = Domain::graph(std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true);
    CHECK(area(circle) == doctest::Approx(kPi / 4).epsilon(1e-10));
    Domain kite = Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}});
    CHECK(area(kite) == doctest::Approx(0.75).epsilon(1e-14));
    // lp-ball closed form vs the 2-D ball special case
    CHECK(area(Domain::lp_ball(2, 2.0)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fixed points of catalog profiles") {
    GraphDomain circle{std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true};
    CHECK(fixed_point(circle) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    GraphDomain line{std::make_shared<PellipseProfile>(1.0, 1.0), Curvature::ConcaveCap, true};
    CHECK(fixed_point(line) == doctest::Approx(0.5).epsilon(1e-12));
    // a sqrt(1-x^2) with a=2: fixed point 2/sqrt(5)
    GraphDomain st{std::make_shared<PellipseProfile>(2.0, 2.0), Curvature::ConcaveCap, false};
    CHECK(fixed_point(st) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("fixed point satisfies the slope -1 law for symmetric smooth profiles") {
    for (double b : {0.2, 0.3, 3.0, 6.0}) {
        auto prof = std::make_shared<ConicProfile>(b);
        GraphDomain g{prof, b < 1 ? Curvature::ConcaveCap : Curvature::ConvexCup, true};
        double x0 = fixed_point(g);
        CHECK(std::fabs(prof->value(x0) - x0) < 1e-10);
        CHECK(prof->slope(x0) == doctest::Approx(-1.0).epsilon(1e-8));
    }
}

TEST_CASE("validate: circle graph is symmetric, concave-cap, not literally smooth") {
    Domain circle = Domain::graph(std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true);
    auto rep = validate(circle);
    CHECK(rep.symmetric);
    CHECK(rep.curvature_ok);
    CHECK_FALSE(rep.smooth_boundary);           // f'(0) = 0 fails the literal criterion
    CHECK(rep.symmetric_closure_smooth);        // but the two-sided closure is round
}

TEST_CASE("validate: box and kite polytope") {
    CHECK_FALSE(Domain::box({1, 2}).is_symmetric());
    CHECK(Domain::box({1, 1}).is_symmetric());
    Domain kite = Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}});
    auto rep = validate(kite);
    CHECK(rep.symmetric);
    CHECK(rep.convex_ok);
    // a kite reaching past the axis intercepts fails the hat-convexity test
    Domain bad = Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {1.4, 1.4}});
    CHECK_FALSE(validate(bad).convex_ok);
}

TEST_CASE("validate: conic with b in (0,1/2) is the smooth-boundary catalog entry") {
    Domain g = Domain::graph(std::make_shared<ConicProfile>(0.3), Curvature::ConcaveCap, true);
    auto rep = validate(g);
    CHECK(rep.symmetric);
    CHECK(rep.curvature_ok);
    CHECK(rep.smooth_boundary);
}

TEST_CASE("gamma-eps curve: endpoints on the axes, slope law") {
    GammaEpsCurve c(0.05);
    Vec2 a = c.point(c.t_lo()), b = c.point(c.t_hi());
    CHECK(std::fabs(a[0]) < 1e-12);
    CHECK(std::fabs(b[1]) < 1e-12);
    // h'(gamma1(t)) = -(2pi - t)/t
    double t = 2.0;
    Vec2 d = c.tangent(t);
    CHECK(d[1] / d[0] == doctest::Approx(-(2 * kPi - t) / t).epsilon(1e-12));
    Domain dom = Domain::curve(std::make_shared<GammaEpsCurve>(0.05));
    CHECK(dom.is_symmetric());
    CHECK(validate(dom).curvature_ok);
}

TEST_CASE("membership oracles") {
    Domain kite = Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}});
    CHECK(kite.contains({0.7, 0.7}));
    CHECK_FALSE(kite.contains({0.8, 0.8}));
    Domain ball = Domain::lp_ball(3, 2.0);
    CHECK(ball.contains({0.3, 0.3, 0.3}));
    CHECK_FALSE(ball.contains({0.4, 0.4, 0.4}));
}
