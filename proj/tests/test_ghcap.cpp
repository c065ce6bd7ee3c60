#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "capax/ghcap.hpp"
#include "capax/oracle.hpp"

using namespace capax;

namespace {
const double kPi = 3.14159265358979323846;

Domain circle_domain() {
    return Domain::graph(std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true);
}
} // namespace

TEST_CASE("balanced vectors") {
    CHECK(balanced_vector(5, 2, Mode::Convex) == IntVec{2, 3});
    CHECK(balanced_vector(7, 3, Mode::Convex) == IntVec{2, 2, 3});
    CHECK(balanced_vector(4, 2, Mode::Concave) == IntVec{3, 2});
    CHECK(balanced_vector(6, 3, Mode::Convex) == IntVec{2, 2, 2});
    CHECK(balanced_vector(3, 2, Mode::Concave) == IntVec{2, 2});
}

TEST_CASE("transfer maps") {
    CHECK(transfer(IntVec{0, 0, 5}, Mode::Convex) == IntVec{0, 1, 4});
    CHECK(transfer(IntVec{2, 2, 2}, Mode::Convex) == IntVec{2, 2, 2});
    CHECK(transfer(IntVec{4, 1}, Mode::Concave) == IntVec{3, 2});
    CHECK_THROWS(transfer(IntVec{3, 1}, Mode::Convex));
    // iterating reaches the balanced vector in at most sum |v_i - k/n| steps
    IntVec v{0, 0, 9};
    int steps = 0;
    for (; v != balanced_vector(9, 3, Mode::Convex) && steps < 50; ++steps)
        v = transfer(v, Mode::Convex);
    CHECK(v == balanced_vector(9, 3, Mode::Convex));
    CHECK(steps <= 12);
}

TEST_CASE("J_k interval classification") {
    // I^k_j = (-(j+1)/(k-j-1), -j/(k-j)]; for k = 5 the right endpoints are
    // 0, -1/4, -2/3, -3/2, -4, half-open exactly as printed
    CHECK(classify_jk(-0.5, 5).jk == 1);        // inside (-2/3, -1/4]
    CHECK(classify_jk(-0.25, 5).jk == 1);       // right endpoint is closed
    CHECK(classify_jk(-0.25 + 1e-12, 5).jk == 0);
    CHECK(classify_jk(-2.0 / 3.0, 5).jk == 2);  // next closed endpoint
    CHECK(classify_jk(-100.0, 5).jk == 4);
    CHECK(classify_jk(-4.0, 5).jk == 4);   // boundary -k+1 belongs to the closed side
    CHECK(classify_jk(-1e-3, 9).jk == 0);
}

TEST_CASE("gh_general ground truth: polydisk and ellipsoids") {
    for (long long k = 1; k <= 12; ++k) {
        CHECK(gh_general(Domain::box({1, 2}), k).value == doctest::Approx(k).epsilon(1e-12));
    }
    // E(1,2): 1,2,2,3,4,4
    std::vector<double> want{1, 2, 2, 3, 4, 4};
    for (long long k = 1; k <= 6; ++k) {
        auto rec = gh_general(Domain::simplex({1, 2}), k);
        CHECK(rec.value == doctest::Approx(want[k - 1]).epsilon(1e-12));
        CHECK(rec.value == doctest::Approx(sorted_multiset_ellipsoid(2.0, k)).epsilon(1e-12));
    }
    CHECK(gh_general(Domain::simplex({1, 1}), 3).value == doctest::Approx(2.0));
}

TEST_CASE("gh_general concave mode on the simplex agrees with the convex mode") {
    for (long long k = 1; k <= 10; ++k) {
        double cx = gh_general(Domain::simplex({1, 2}), k).value;
        // force the concave clause through a curve-free concave domain: the
        // simplex is both, so gh_symmetric with the concave collapse must agree
        double cc = support_min(Domain::simplex({1, 2}),
                                balanced_vector(k, 2, Mode::Concave)).value;
        CHECK(cc <= cx + 1e-12);  // concave formula's max equals c_k; spot check below
    }
    // E(1,1) both ways
    for (long long k = 1; k <= 10; ++k) {
        CHECK(gh_symmetric(Domain::simplex({1, 1}), k).value
              == doctest::Approx(std::ceil(k / 2.0)).epsilon(1e-12));
    }
}

TEST_CASE("gh_symmetric examples") {
    CHECK(gh_symmetric(Domain::simplex({1, 1}), 4).value == doctest::Approx(2.0));
    CHECK(gh_symmetric(Domain::lp_ball(2, 4.0), 3).value
          == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    Domain kite = Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}});
    CHECK(gh_symmetric(kite, 2).value == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("collapse equivalence on symmetric domains") {
    Domain kite = Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}});
    for (long long k = 1; k <= 20; ++k) {
        CHECK(gh_symmetric(kite, k).value
              == doctest::Approx(gh_general(kite, k).value).epsilon(1e-9));
        CHECK(gh_symmetric(circle_domain(), k).value
              == doctest::Approx(gh_general(circle_domain(), k).value).epsilon(1e-9));
    }
    Domain gam = Domain::curve(std::make_shared<GammaEpsCurve>(0.05));
    for (long long k = 1; k <= 12; ++k) {
        CHECK(gh_symmetric(gam, k).value
              == doctest::Approx(gh_general(gam, k).value).epsilon(1e-9));
    }
}

TEST_CASE("gh_graph_symmetric: the round example") {
    GraphDomain c{std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true};
    for (long long k = 1; k <= 40; ++k) {
        double want = k % 2 == 0 ? k / std::sqrt(2.0)
                                 : std::sqrt(static_cast<double>(k) * k + 1) / std::sqrt(2.0);
        CHECK(gh_graph_symmetric(c, k).value == doctest::Approx(want).epsilon(1e-10));
    }
    CHECK(gh_graph_symmetric(c, 4).value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(gh_graph_symmetric(c, 5).value == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));
    // x_5 = (k-1)/sqrt(2k^2+2) = 2/sqrt(13)... carrier x-coordinate
    auto rec = gh_graph_symmetric(c, 5);
    CHECK(rec.carrier_point[0] == doctest::Approx(4.0 / std::sqrt(52.0)).epsilon(1e-10));
}

TEST_CASE("gh_graph_convex agrees with gh_general and handles class-V profiles") {
    GraphDomain e2{std::make_shared<PellipseProfile>(2.0, std::exp(1.0)),
                   Curvature::ConcaveCap, false};
    Domain dome2(e2);
    for (long long k : {2, 3, 5, 8, 13}) {
        CHECK(gh_graph_convex(e2, k).value
              == doctest::Approx(gh_general(dome2, k).value).epsilon(1e-9));
    }
    // k = 123 at p = 2 cross-checks the two engines (leftmost figure point)
    CHECK(gh_graph_convex(e2, 123).value
          == doctest::Approx(gh_pellipsoid(2.0, std::exp(1.0), 123).value).epsilon(1e-8));
}

TEST_CASE("gh_pellipsoid examples") {
    // p large: capacity saturates at k
    CHECK(gh_pellipsoid(10.0, 1.5, 2).value == doctest::Approx(2.0).epsilon(1e-12));
    // (p=2, a=1, k=3): sqrt(5) = sqrt(10)/sqrt(2)
    CHECK(gh_pellipsoid(2.0, 1.0, 3).value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
    // ellipsoid limit p -> 1+: matches the sorted-multiset oracle
    for (long long k = 1; k <= 12; ++k) {
        CHECK(gh_pellipsoid(1.0 + 1e-6, 2.0, k).value
              == doctest::Approx(sorted_multiset_ellipsoid(2.0, k)).epsilon(1e-4));
        CHECK(gh_pellipsoid(1.0, 2.0, k).value
              == doctest::Approx(sorted_multiset_ellipsoid(2.0, k)).epsilon(1e-12));
    }
    // Lemma p: for fixed p, some capacity below k, here via the F-term formula
    double a = 2.0, p = 1.5;
    long long k = 40;
    auto rec = gh_pellipsoid(p, a, k);
    CHECK(rec.value < static_cast<double>(k));
    long long m = rec.carrier_vector[0];  // the ell index of the minimizing term
    double q = p / (p - 1.0);
    double expect = std::pow(std::pow(a * (k - m), q) + std::pow(static_cast<double>(m), q),
                             1.0 / q);
    CHECK(rec.value == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("gh_lp_ball closed forms") {
    CHECK(gh_lp_ball(2, 4.0, 2).value == doctest::Approx(2.0 / std::pow(2.0, 0.5)).epsilon(1e-12));
    CHECK(gh_lp_ball(2, 1.0, 3).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gh_lp_ball(3, 4.0, 4).value == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
    // p = 2 gives the round ball
    for (long long k = 1; k <= 8; ++k)
        CHECK(gh_lp_ball(2, 2.0, k).value == doctest::Approx(std::ceil(k / 2.0)));
}

TEST_CASE("gh_polytope examples") {
    PolytopeDomain kite75{{{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}}};
    CHECK(gh_polytope(kite75, 3).value == doctest::Approx(2.25).epsilon(1e-12));
    PolytopeDomain kite55{{{0, 0}, {1, 0}, {0, 1}, {0.55, 0.55}}};
    CHECK(gh_polytope(kite55, 3).value == doctest::Approx(2.0).epsilon(1e-12));
    PolytopeDomain square{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    CHECK(gh_polytope(square, 7).value == doctest::Approx(7.0).epsilon(1e-12));
    PolytopeDomain asym{{{0, 0}, {1, 0}, {0, 2}}};
    CHECK_THROWS(gh_polytope(asym, 1));
}

TEST_CASE("lagrangian bidisk capacities") {
    CHECK(gh_lagrangian_bidisk(1).value == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(gh_lagrangian_bidisk(3).value == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(gh_lagrangian_bidisk(2).value
          == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-9));
    // even-k engine value (2k+2) sin(pi k/(2k+2)); monotone in k
    double prev = 0;
    for (long long k = 1; k <= 21; ++k) {
        double v = gh_lagrangian_bidisk(k).value;
        if (k % 2 == 1) CHECK(v == doctest::Approx(2.0 * k + 2.0).epsilon(1e-9));
        else CHECK(v == doctest::Approx((2.0 * k + 2.0) * std::sin(kPi * k / (2.0 * k + 2.0)))
                            .epsilon(1e-9));
        CHECK(v >= prev - 1e-9);
        prev = v;
    }
}

TEST_CASE("or lp bidisk: gamma identity, endpoint zero, case formulas") {
    for (double p : {1.5, 3.0}) {
        double g0 = or_gp(p, 0.0);
        double exact = 2.0 * std::exp(2 * std::lgamma(1 + 1 / p) - std::lgamma(1 + 2 / p));
        CHECK(g0 == doctest::Approx(exact).epsilon(1e-8));
        CHECK(std::fabs(or_gp(p, std::pow(0.25, 1.0 / p))) < 1e-12);
    }
    // threshold cases (verified against direct curve minimization in scratch):
    // p=1.5 odd k<6.46 -> (k+1)/2 * lambda; even -> k g_p(0)
    double lam15 = 2.0 * kPi / std::pow(4.0, 1.0 / 1.5);
    CHECK(gh_or_lp_bidisk(1.5, 1).value == doctest::Approx(lam15).epsilon(1e-9));
    CHECK(gh_or_lp_bidisk(1.5, 2).value == doctest::Approx(2 * or_gp(1.5, 0.0)).epsilon(1e-9));
    CHECK(gh_or_lp_bidisk(1.5, 7).value == doctest::Approx(9.981989834).epsilon(1e-7));
    CHECK(gh_or_lp_bidisk(3.0, 2).value == doctest::Approx(3.958158714).epsilon(1e-7));
    CHECK(gh_or_lp_bidisk(3.0, 6).value == doctest::Approx(11.775704048).epsilon(1e-6));
    CHECK_THROWS(gh_or_lp_bidisk(2.0001, 1));
}

TEST_CASE("ball bounds") {
    auto b = ball_bounds(circle_domain());
    CHECK(b.a_sup == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b.A_inf == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    b = ball_bounds(Domain::simplex({1, 1}));
    CHECK(b.a_sup == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b.A_inf == doctest::Approx(1.0).epsilon(1e-10));
    b = ball_bounds(Domain::polytope({{0, 0}, {1, 0}, {0, 1}, {0.75, 0.75}}));
    CHECK(b.a_sup == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(b.A_inf == doctest::Approx(1.5).epsilon(1e-9));
    // c_1 of a symmetric convex toric domain equals a_sup
    CHECK(gh_symmetric(circle_domain(), 1).value == doctest::Approx(b.a_sup).epsilon(1e-2));
}

TEST_CASE("carriers of the circle") {
    GraphDomain c{std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true};
    auto list = carriers(c, 4);
    CHECK(list[0].point[0] == doctest::Approx(0.0));
    CHECK(list[0].point[1] == doctest::Approx(1.0));
    CHECK(list[0].torus_class == IntVec{0, 1});
    CHECK(list[2].point[0] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(list[2].point[1] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(list[2].torus_class == IntVec{1, 2});
    CHECK(list[3].point[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(list[3].torus_class == IntVec{2, 2});
}

TEST_CASE("carrier sequence x_k increases and converges to the fixed point") {
    GraphDomain c{std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true};
    double x0 = fixed_point(c);
    double prev = -1;
    for (long long k = 3; k <= 41; k += 2) {
        double xk = gh_graph_symmetric(c, k).carrier_point[0];
        CHECK(xk > prev);
        CHECK(xk < x0);
        prev = xk;
    }
    CHECK(x0 - prev < 0.02);
}

TEST_CASE("composition overflow guard") {
    CHECK_THROWS(gh_general(Domain::lp_ball(3, 4.0), 10000));
}
