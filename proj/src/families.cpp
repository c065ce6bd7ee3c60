#include "capax/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "capax/echcap.hpp"
#include "capax/quadrature.hpp"
#include "capax/roots.hpp"

namespace capax {

namespace {

// x with f'(x) = target on (0, lam); slopes of class profiles are monotone.
double slope_root(const Profile& f, double target, double lam) {
    auto fn = [&](double x) {
        double s = f.slope(x);
        if (!std::isfinite(s)) s = s > 0 ? 1e300 : -1e300;
        return s - target;
    };
    return bisect(fn, 1e-13 * lam, lam * (1.0 - 1e-13), 1e-14 * lam);
}

SmoothTable trough_for_zero_integral(double lo, double hi, double positive_mass) {
    if (!(lo < hi))
        throw std::invalid_argument("family bump: no room for the compensating trough");
    double w = hi - lo;
    SmoothTable t{lo, lo + w / 3.0, hi - w / 3.0, hi, 1.0};
    t.height = -positive_mass / t.integral();
    return t;
}

} // namespace

GraphDomain symmetric_extend(const GraphDomain& base, const PerturbationSpec& spec) {
    if (!base.symmetric)
        throw std::invalid_argument("symmetric_extend: base must be symmetric");
    std::vector<PerturbationSpec> specs;
    if (spec.epsilon != 0.0) specs.push_back(spec);
    if (specs.empty()) return base;
    auto prof = std::make_shared<PerturbedProfile>(base.profile, std::move(specs));
    GraphDomain out{prof, base.curvature, true};
    ValidationReport rep = validate(Domain(out));
    if (!rep.curvature_ok)
        throw std::invalid_argument("symmetric_extend: amplitude breaks the curvature class");
    if (!rep.symmetric)
        throw std::invalid_argument("symmetric_extend: extension failed the involution check");
    return out;
}

GraphDomain family_novolume(const GraphDomain& f, long long j, double delta) {
    if (f.curvature != Curvature::ConcaveCap || !f.symmetric)
        throw std::invalid_argument("family_novolume: need a symmetric convex graph domain");
    if (j < 3 || j % 2 == 0)
        throw std::invalid_argument("family_novolume: j must be odd and > 1");
    const Profile& prof = *f.profile;
    double lam = prof.lambda();
    double xj = slope_root(prof, -static_cast<double>(j - 1) / (j + 1), lam);
    double xj2 = slope_root(prof, -static_cast<double>(j + 1) / (j + 3), lam);
    double w = xj2 - xj;
    PerturbationSpec spec = make_bump(xj + 0.05 * w, xj2 - 0.05 * w, 0, 0, 0.0, 0.5);
    spec.epsilon = delta;
    if (delta == 0.0) return f;
    return symmetric_extend(f, spec);
}

GraphDomain family_mutual(const GraphDomain& base, long long j, double delta) {
    if (j < 1) throw std::invalid_argument("family_mutual: j >= 1");
    if (delta == 0.0) return base;
    const Profile& prof = *base.profile;
    double lam = prof.lambda();
    GraphDomain g = base;

    PerturbationSpec spec;
    if (j % 2 == 0) {
        // concave domain, plateau 2/j over the even carrier
        if (base.curvature != Curvature::ConvexCup || !base.symmetric)
            throw std::invalid_argument("family_mutual: even j needs a symmetric concave graph domain");
        double xj = slope_root(prof, -static_cast<double>(j + 2) / j, lam);
        double s_lo = j == 2 ? -HUGE_VAL : -static_cast<double>(j) / (j - 2);
        double L = prof.slope(0.0) < s_lo ? slope_root(prof, s_lo, lam) : 0.0;
        double R = slope_root(prof, -static_cast<double>(j + 4) / (j + 2), lam);
        double m = 0.05 * (R - L);
        double wp = 0.05 * std::min(xj - L, R - xj);
        SmoothTable main{0, xj - wp, xj + wp, R - m, 2.0 / j};
        double rise = 0.42 * (xj - wp - (L + m));
        main.a = xj - wp - rise;
        std::vector<SmoothTable> parts{main};
        parts.push_back(trough_for_zero_integral(L + m, main.a - 0.02 * (R - L),
                                                 main.integral()));
        spec.bump = Bump(parts);
        spec.plateau_lo = main.p1;
        spec.plateau_hi = main.p2;
        spec.plateau_height = main.height;
    } else if (j >= 3) {
        if (base.curvature != Curvature::ConcaveCap || !base.symmetric)
            throw std::invalid_argument("family_mutual: odd j needs a symmetric convex graph domain");
        double xj = slope_root(prof, -static_cast<double>(j - 1) / (j + 1), lam);
        double s_lo = -static_cast<double>(j - 3) / (j - 1);  // 0 when j == 3
        double L = prof.slope(0.0) > s_lo ? slope_root(prof, s_lo, lam) : 0.0;
        double R = slope_root(prof, -static_cast<double>(j + 1) / (j + 3), lam);
        double m = 0.05 * (R - L);
        double wp = 0.05 * std::min(xj - L, R - xj);
        SmoothTable main{0, xj - wp, xj + wp, R - m, 2.0 / (j + 1)};
        double rise = 0.42 * (xj - wp - (L + m));
        main.a = xj - wp - rise;
        std::vector<SmoothTable> parts{main};
        parts.push_back(trough_for_zero_integral(L + m, main.a - 0.02 * (R - L),
                                                 main.integral()));
        spec.bump = Bump(parts);
        spec.plateau_lo = main.p1;
        spec.plateau_hi = main.p2;
        spec.plateau_height = main.height;
    } else {
        // j = 1: plateau 1 at the left edge, zero beyond x_3/2; lambda grows
        if (base.curvature != Curvature::ConcaveCap || !base.symmetric)
            throw std::invalid_argument("family_mutual: j = 1 needs a symmetric convex graph domain");
        double x3 = slope_root(prof, -0.5, lam);
        double X = 0.5 * x3;
        SmoothTable main{0.0, 0.0, 0.10 * X, 0.40 * X, 1.0};
        std::vector<SmoothTable> parts{main};
        parts.push_back(trough_for_zero_integral(0.45 * X, 0.97 * X, main.integral()));
        spec.bump = Bump(parts);
        spec.plateau_lo = 0.0;
        spec.plateau_hi = main.p2;
        spec.plateau_height = 1.0;
    }
    spec.integral = spec.bump.integral();
    spec.epsilon = delta;
    return symmetric_extend(g, spec);
}

BlindPair family_blind(double eps, double delta) {
    auto curve = std::make_shared<GammaEpsCurve>(eps);
    auto prof = std::make_shared<CurveGraphProfile>(curve);
    GraphDomain before{prof, Curvature::ConvexCup, true};
    if (prof->slope(0.0) >= -4.0)
        throw std::invalid_argument("family_blind: eps too large, h'(0) must be < -4");

    auto x_at_slope = [&](double s) {
        return curve->point(GammaEpsCurve::param_for_slope(s))[0];
    };
    double y22 = x_at_slope(-3.0);
    double y221 = x_at_slope(-2.5);   // right neighbor tangency
    double y222 = x_at_slope(-4.0);   // left neighbor tangency

    double right = y221 - y22, left = y22 - y222;
    double wp = 0.06 * std::min(left, right);
    SmoothTable main{y22 - 0.45 * left, y22 - wp, y22 + wp, y22 + 0.55 * right, 1.0};
    std::vector<SmoothTable> parts{main};
    parts.push_back(trough_for_zero_integral(y222 + 0.08 * left, main.a - 0.05 * left,
                                             main.integral()));
    PerturbationSpec rho;
    rho.bump = Bump(parts);
    rho.plateau_lo = main.p1;
    rho.plateau_hi = main.p2;
    rho.plateau_height = 1.0;
    rho.integral = rho.bump.integral();
    rho.epsilon = delta;

    BlindPair pair{before, delta == 0.0 ? before : symmetric_extend(before, rho), rho};
    return pair;
}

Ech9Shift ech9_shift(const GraphDomain& h, const PerturbationSpec& rho, double delta) {
    PerturbationSpec spec = rho;
    spec.epsilon = delta;
    GraphDomain after = delta == 0.0 ? h : symmetric_extend(h, spec);
    double before_val = ech_capacity(Domain(h), 9).value;
    double after_val = ech_capacity(Domain(after), 9).value;
    return {before_val, after_val};
}

namespace {

std::vector<std::pair<double, double>> mirror_close(
    std::vector<std::pair<double, double>> left, double lam) {
    // append the swapped reflection of the left chain (excluding the diagonal
    // point) and terminate on the x-axis
    std::vector<std::pair<double, double>> out = left;
    for (auto it = left.rbegin() + 1; it != left.rend(); ++it)
        out.emplace_back(it->second, it->first);
    if (std::fabs(out.back().second) > 0) out.emplace_back(lam, 0.0);
    // drop consecutive duplicates
    std::vector<std::pair<double, double>> dedup;
    for (const auto& p : out) {
        if (!dedup.empty() && std::fabs(p.first - dedup.back().first) < 1e-13 &&
            std::fabs(p.second - dedup.back().second) < 1e-13)
            continue;
        dedup.push_back(p);
    }
    return dedup;
}

} // namespace

IvrGraphBounds ivr_graph_bounds(const GraphDomain& f) {
    if (f.curvature != Curvature::ConcaveCap || !f.symmetric)
        throw std::invalid_argument("ivr_graph_bounds: need a symmetric convex graph domain");
    const Profile& prof = *f.profile;
    double lam = prof.lambda();
    double x0 = fixed_point(f);
    double s0 = prof.slope(0.0);
    if (s0 <= -0.5)
        throw std::invalid_argument("ivr_graph_bounds: need f'(0) in (-1/2, 0]");

    // odd-carrier points until the remaining strip is negligible
    std::vector<double> xs;
    const double strip_tol = 1e-5 * std::max(1.0, lam);
    for (long long k = 1;; k += 2) {
        double branch = -static_cast<double>(k - 1) / (k + 1);
        double xk = branch >= s0 ? 0.0 : slope_root(prof, branch, lam);
        xs.push_back(xk);
        if (x0 - xk < strip_tol) break;
        if (xs.size() > 2000000)
            throw std::runtime_error("ivr_graph_bounds: carrier series failed to converge");
    }

    // inscribed: polyline through (0, lam), the carriers, and the diagonal
    std::vector<std::pair<double, double>> under{{0.0, lam}};
    for (double x : xs) under.emplace_back(x, prof.value(x));
    under.emplace_back(x0, x0);
    auto under_pts = mirror_close(under, lam);

    // circumscribed: consecutive intersections of the carrier tangent lines
    struct Line { double s, b; };
    std::vector<Line> lines{{s0, lam}};
    for (double x : xs) {
        double s = prof.slope(x);
        lines.push_back({s, prof.value(x) - s * x});
    }
    std::vector<std::pair<double, double>> over{{0.0, lam}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (std::fabs(lines[i].s - lines[i - 1].s) < 1e-13) continue;
        double x = (lines[i].b - lines[i - 1].b) / (lines[i - 1].s - lines[i].s);
        over.emplace_back(x, lines[i - 1].s * x + lines[i - 1].b);
    }
    double xd = lines.back().b / (1.0 - lines.back().s);  // last tangent meets y = x
    over.emplace_back(xd, xd);
    auto over_pts = mirror_close(over, lam);

    IvrGraphBounds out{
        GraphDomain{std::make_shared<PolylineProfile>(under_pts), Curvature::ConcaveCap, true},
        GraphDomain{std::make_shared<PolylineProfile>(over_pts), Curvature::ConcaveCap, true},
        0.0, 0.0};
    double a_under = area(Domain(out.lower)), a_over = area(Domain(out.upper));
    out.ratio = a_over / a_under;
    double gap = x0 - xs.back();
    double mirror_gap = prof.value(xs.back()) - x0;
    out.error_bar = 4.0 * gap * mirror_gap / a_under;
    return out;
}

std::vector<RealVec> omega_r_vertices(double r) {
    return {{0, 0}, {1, 0}, {0, 1}, {r, r}};
}

std::vector<RealVec> omega_rab_vertices(double r, double a, double b) {
    return {{0, 0}, {1, 0}, {0, 1}, {r, r}, {a, b}, {b, a}};
}

double ivr_polytope_bound(double r, long long k_max) {
    if (r < 2.0 / 3.0 || r >= 1.0)
        throw std::invalid_argument("ivr_polytope_bound: r in [2/3, 1)");
    PolytopeDomain base{omega_r_vertices(r)};
    PolytopeDomain ext{omega_rab_vertices(r, 1.0, 3.0 * r - 2.0)};
    for (long long k = 1; k <= k_max; ++k) {
        double c0 = gh_polytope(base, k).value;
        double c1 = gh_polytope(ext, k).value;
        if (std::fabs(c0 - c1) > 1e-9)
            throw std::runtime_error("ivr_polytope_bound: isocapacity check failed");
    }
    double bound = 3.0 * (2.0 - r) - 2.0 / r;
    double measured = area(Domain(ext)) / area(Domain(base));
    if (std::fabs(measured - bound) > 1e-9)
        throw std::runtime_error("ivr_polytope_bound: area ratio does not match the closed form");
    return bound;
}

FamilyCheck verify_family(const GraphDomain& base, const GraphDomain& pert,
                          long long k_max, long long shifted_k, double cap_shift,
                          double area_shift, double tol) {
    FamilyCheck chk;
    for (long long k = 1; k <= k_max; ++k) {
        double c0 = gh_graph_symmetric(base, k).value;
        double c1 = gh_graph_symmetric(pert, k).value;
        chk.base_caps.push_back(c0);
        chk.pert_caps.push_back(c1);
        double expected = (k == shifted_k) ? cap_shift : 0.0;
        chk.max_capacity_residual =
            std::max(chk.max_capacity_residual, std::fabs(c1 - c0 - expected));
    }
    // area difference by piecewise quadrature of (pert - base), split at the
    // perturbation supports and their mirrors
    std::vector<double> cuts{0.0};
    double lam = std::max(base.profile->lambda(), pert.profile->lambda());
    if (auto* pp = dynamic_cast<const PerturbedProfile*>(pert.profile.get())) {
        cuts.push_back(pp->fixed_x());
        for (const auto& s : pp->specs()) {
            cuts.push_back(s.bump.support_lo());
            cuts.push_back(s.bump.support_hi());
            cuts.push_back(pp->left_value(s.bump.support_hi()));
            cuts.push_back(pp->left_value(s.bump.support_lo()));
        }
        cuts.push_back(base.profile->lambda());
        cuts.push_back(pp->lambda());
    }
    cuts.push_back(lam);
    std::sort(cuts.begin(), cuts.end());
    double diff = 0.0;
    auto base_val = [&](double x) {
        return x >= base.profile->lambda() ? 0.0 : base.profile->value(x);
    };
    auto pert_val = [&](double x) {
        return x >= pert.profile->lambda() ? 0.0 : pert.profile->value(x);
    };
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (cuts[i] - cuts[i - 1] < 1e-14) continue;
        diff += adaptive_simpson([&](double x) { return pert_val(x) - base_val(x); },
                                 cuts[i - 1], cuts[i], 1e-12);
    }
    chk.area_residual = std::fabs(diff - area_shift);
    chk.pass = chk.max_capacity_residual <= tol && chk.area_residual <= tol;
    return chk;
}

} // namespace capax
