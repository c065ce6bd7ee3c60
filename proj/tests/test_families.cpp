#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "capax/echcap.hpp"
#include "capax/families.hpp"
#include "capax/quadrature.hpp"

using namespace capax;

namespace {

// bases sized so that delta = 0.01 stays inside the validated class range
GraphDomain convex_base() {
    return {std::make_shared<ConicProfile>(0.2, 80.0), Curvature::ConcaveCap, true};
}

GraphDomain concave_base() {
    auto curve = std::make_shared<ScaledCurve>(std::make_shared<GammaEpsCurve>(0.05), 3.0);
    return {std::make_shared<CurveGraphProfile>(curve), Curvature::ConvexCup, true};
}

} // namespace

TEST_CASE("make_bump meets declared plateau and integral") {
    auto spec = make_bump(0.2, 0.4, 0.28, 0.32, 1.0, 0.0);
    CHECK(spec.bump.value(0.3) == doctest::Approx(1.0));
    CHECK(spec.bump.value(0.19) == doctest::Approx(0.0));
    CHECK(spec.bump.value(0.41) == doctest::Approx(0.0));
    double quad = adaptive_simpson([&](double x) { return spec.bump.value(x); },
                                   0.19, 0.41, 1e-13);
    CHECK(std::fabs(quad) < 1e-10);
    CHECK(std::fabs(spec.bump.integral()) < 1e-14);

    auto eta = make_bump(0.2, 0.4, 0, 0, 0.0, 0.5);
    double qi = adaptive_simpson([&](double x) { return eta.bump.value(x); }, 0.2, 0.4, 1e-13);
    CHECK(qi == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(eta.bump.integral() == doctest::Approx(0.5).epsilon(1e-12));

    auto b4 = make_bump(0.1, 0.5, 0.25, 0.35, 2.0 / 4.0, 0.0);
    CHECK(b4.bump.value(0.3) == doctest::Approx(0.5));

    CHECK_THROWS(make_bump(0.4, 0.2, 0, 0, 0.0, 0.5));
}

TEST_CASE("symmetric extension: involution, mirror support, mirror integral") {
    GraphDomain base = convex_base();
    const Profile& bp = *base.profile;
    double x0 = fixed_point(base);
    double a = 0.2 * x0, b = 0.4 * x0;
    auto spec = make_bump(a, b, 0, 0, 0.0, 0.5);
    spec.epsilon = 0.01;
    GraphDomain ext = symmetric_extend(base, spec);
    const Profile& ep = *ext.profile;

    // involution on a grid
    double lam = ep.lambda();
    for (int i = 0; i <= 1000; ++i) {
        double x = lam * i / 1000.0;
        CHECK(std::fabs(ep.value(ep.value(x)) - x) < 1e-8 * lam);
    }
    // mirror support is [g(b), g(a)]
    double glo = bp.value(b), ghi = bp.value(a);
    CHECK(std::fabs(ep.value(glo - 0.01 * lam) - bp.value(glo - 0.01 * lam)) < 1e-11 * lam);
    CHECK(std::fabs(ep.value(0.5 * (glo + ghi)) - bp.value(0.5 * (glo + ghi))) > 1e-7);
    // mirror integral equals the bump integral
    double mirror = adaptive_simpson([&](double x) {
        return (ep.value(x) - bp.value(x)) / spec.epsilon;
    }, glo, ghi, 1e-12);
    CHECK(mirror == doctest::Approx(spec.bump.integral()).epsilon(1e-7));
    // zero amplitude returns the base unchanged
    auto zero = spec;
    zero.epsilon = 0.0;
    GraphDomain same = symmetric_extend(base, zero);
    CHECK(same.profile.get() == base.profile.get());
}

TEST_CASE("mirror integral identity on random bumps") {
    GraphDomain base = convex_base();
    double x0 = fixed_point(base);
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> U(0.05, 0.95);
    for (int trial = 0; trial < 25; ++trial) {
        double a = U(rng) * 0.6 * x0;
        double b = a + 0.05 * x0 + U(rng) * 0.25 * x0;
        if (b > 0.95 * x0) continue;
        double target = (U(rng) - 0.5) * 0.3;
        auto spec = make_bump(a, b, 0, 0, 0.0, target == 0 ? 0.1 : target);
        spec.epsilon = 0.002;
        GraphDomain ext = symmetric_extend(base, spec);
        double glo = base.profile->value(b), ghi = base.profile->value(a);
        double mirror = adaptive_simpson([&](double x) {
            return (ext.profile->value(x) - base.profile->value(x)) / spec.epsilon;
        }, glo, ghi, 1e-12);
        CHECK(mirror == doctest::Approx(spec.bump.integral()).epsilon(1e-6));
    }
}

TEST_CASE("family_novolume: capacities fixed, area moves by delta") {
    GraphDomain base = convex_base();
    double delta = 0.01;
    GraphDomain pert = family_novolume(base, 3, delta);
    auto chk = verify_family(base, pert, 30, -1, 0.0, delta, 1e-8);
    CHECK(chk.pass);
    CHECK(chk.max_capacity_residual < 1e-8);
    CHECK(chk.area_residual < 1e-8);
    // delta = 0 is the identity
    CHECK(family_novolume(base, 3, 0.0).profile.get() == base.profile.get());
    // carriers avoid the support: x_k outside (x_3, x_5) for all odd k != 3,5
    auto cs = carriers(base, 30);
    const auto* pp = dynamic_cast<const PerturbedProfile*>(pert.profile.get());
    REQUIRE(pp != nullptr);
    double slo = pp->specs()[0].bump.support_lo(), shi = pp->specs()[0].bump.support_hi();
    for (const auto& c : cs) {
        CHECK((c.point[0] <= slo + 1e-12 || c.point[0] >= shi - 1e-12));
    }
}

TEST_CASE("family_mutual moves exactly one capacity") {
    double delta = 0.01;
    for (long long j : {1, 2, 3, 4}) {
        GraphDomain base = j % 2 == 0 ? concave_base() : convex_base();
        GraphDomain pert = family_mutual(base, j, delta);
        auto chk = verify_family(base, pert, 30, j, delta, 0.0, 1e-8);
        INFO("j = ", j, " cap residual ", chk.max_capacity_residual,
             " area residual ", chk.area_residual);
        CHECK(chk.pass);
    }
    CHECK(family_mutual(convex_base(), 3, 0.0).profile.get() == convex_base().profile.get());
}

TEST_CASE("family_mutual j=1 grows the right endpoint") {
    GraphDomain base = convex_base();
    double delta = 0.01;
    GraphDomain pert = family_mutual(base, 1, delta);
    CHECK(pert.profile->lambda()
          == doctest::Approx(base.profile->lambda() + delta).epsilon(1e-12));
    CHECK(gh_graph_symmetric(pert, 1).value
          == doctest::Approx(gh_graph_symmetric(base, 1).value + delta).epsilon(1e-9));
}

TEST_CASE("family_blind: slopes separate and the pair verifies") {
    double eps = 0.05, delta = 0.005;
    BlindPair pair = family_blind(eps, delta);
    // slope separation at the named points
    const Profile& h = *pair.before.profile;
    double x2 = 0, xh = 0, y22 = 0;
    auto curve = std::make_shared<GammaEpsCurve>(eps);
    x2 = curve->point(GammaEpsCurve::param_for_slope(-2.0))[0];
    y22 = curve->point(GammaEpsCurve::param_for_slope(-3.0))[0];
    xh = curve->point(GammaEpsCurve::param_for_slope(-1.0))[0];
    CHECK(h.slope(x2) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(h.slope(y22) == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(h.slope(xh) == doctest::Approx(-1.0).epsilon(1e-9));
    // capacities and area equal
    auto chk = verify_family(pair.before, pair.after, 30, -1, 0.0, 0.0, 1e-8);
    CHECK(chk.pass);
    // rho support avoids the carriers and the fixed point
    double slo = pair.rho.bump.support_lo(), shi = pair.rho.bump.support_hi();
    CHECK(shi < x2);
    CHECK((y22 > slo && y22 < shi));
    CHECK(slo > curve->point(GammaEpsCurve::param_for_slope(-4.0))[0]);
}

TEST_CASE("ech9 shift equals delta") {
    double eps = 0.05;
    for (double delta : {0.0, 0.005}) {
        BlindPair pair = family_blind(eps, delta);
        auto shift = ech9_shift(pair.before, pair.rho, delta);
        CHECK(shift.after - shift.before == doctest::Approx(delta).epsilon(1e-6));
    }
}

TEST_CASE("tau-level delta shifts of the blind pair") {
    double eps = 0.05, delta = 0.005;
    BlindPair pair = family_blind(eps, delta);
    auto t0 = symmetric_tau_table(Domain(pair.before));
    auto t1 = symmetric_tau_table(Domain(pair.after));
    REQUIRE(t0.size() == t1.size());
    for (std::size_t i = 0; i < t0.size(); ++i) {
        double want = 0.0;
        if (t0[i].label == "22") want = delta;
        if (t0[i].label == "222" || t0[i].label == "221") want = -delta;
        CHECK(t1[i].value - t0[i].value == doctest::Approx(want).epsilon(1e-7));
    }
}

TEST_CASE("ivr polytope bound") {
    double r = std::sqrt(2.0 / 3.0);
    CHECK(ivr_polytope_bound(r) == doctest::Approx(6.0 - 2.0 * std::sqrt(6.0)).epsilon(1e-12));
    CHECK(ivr_polytope_bound(2.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(ivr_polytope_bound(0.5));
    // isocapacity region example: r = 0.85, (a,b) = (1, 0.55) satisfies 2a+b <= 3r
    PolytopeDomain base{{{0, 0}, {1, 0}, {0, 1}, {0.85, 0.85}}};
    PolytopeDomain ext{{{0, 0}, {1, 0}, {0, 1}, {0.85, 0.85}, {1.0, 0.55}, {0.55, 1.0}}};
    for (long long k = 1; k <= 20; ++k)
        CHECK(gh_polytope(base, k).value
              == doctest::Approx(gh_polytope(ext, k).value).epsilon(1e-12));
}

TEST_CASE("ivr graph bounds on the quarter circle") {
    GraphDomain circle{std::make_shared<CircleProfile>(), Curvature::ConcaveCap, true};
    auto bounds = ivr_graph_bounds(circle);
    CHECK(bounds.ratio == doctest::Approx(1.0331).epsilon(5e-4));
    CHECK(std::fabs(bounds.ratio - 1.0335) < 1e-3);
    CHECK(bounds.ratio >= 1.0);
    CHECK(bounds.error_bar < 1e-6);
    // nesting: lower inside, upper outside
    for (double x : {0.1, 0.3, 0.5, 0.6}) {
        CHECK(bounds.lower.profile->value(x) <= circle.profile->value(x) + 1e-12);
        CHECK(bounds.upper.profile->value(x) >= circle.profile->value(x) - 1e-12);
    }
    // capacities of both envelopes match the round closed form
    for (long long k = 1; k <= 25; ++k) {
        double want = k % 2 == 0 ? k / std::sqrt(2.0)
                                 : std::sqrt(static_cast<double>(k) * k + 1) / std::sqrt(2.0);
        CHECK(gh_symmetric(Domain(bounds.lower), k).value
              == doctest::Approx(want).epsilon(1e-6));
        CHECK(gh_symmetric(Domain(bounds.upper), k).value
              == doctest::Approx(want).epsilon(1e-6));
    }
}
