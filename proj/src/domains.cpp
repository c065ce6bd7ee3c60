#include "capax/domains.hpp"

#include "capax/bumps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "capax/quadrature.hpp"
#include "capax/roots.hpp"

namespace capax {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

bool perm_closed(const std::vector<RealVec>& verts, double tol) {
    if (verts.empty()) return true;
    std::size_t n = verts[0].size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (const auto& v : verts) {
            RealVec pv(n);
            for (std::size_t i = 0; i < n; ++i) pv[i] = v[perm[i]];
            bool found = false;
            for (const auto& w : verts) {
                double d = 0;
                for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::fabs(pv[i] - w[i]));
                if (d <= tol) { found = true; break; }
            }
            if (!found) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

double cross(const RealVec& o, const RealVec& a, const RealVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool point_in_hull2d(const std::vector<RealVec>& hull, const RealVec& p, double tol) {
    // hull counterclockwise; inside iff left of (or on) every edge
    std::size_t m = hull.size();
    if (m == 1) return std::fabs(p[0] - hull[0][0]) <= tol && std::fabs(p[1] - hull[0][1]) <= tol;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % m];
        if (cross(a, b, p) < -tol) return false;
    }
    return true;
}

} // namespace

std::vector<RealVec> hull2d(const std::vector<RealVec>& pts) {
    std::vector<RealVec> p = pts;
    std::sort(p.begin(), p.end(), [](const RealVec& a, const RealVec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    p.erase(std::unique(p.begin(), p.end(), [](const RealVec& a, const RealVec& b) {
        return std::fabs(a[0] - b[0]) < 1e-14 && std::fabs(a[1] - b[1]) < 1e-14;
    }), p.end());
    if (p.size() < 3) return p;
    std::vector<RealVec> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 1e-15) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 1e-15) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

int Domain::dimension() const {
    return std::visit(overloaded{
        [](const SimplexDomain& d) { return static_cast<int>(d.scales.size()); },
        [](const BoxDomain& d) { return static_cast<int>(d.scales.size()); },
        [](const LpBallDomain& d) { return d.n; },
        [](const PolytopeDomain& d) {
            return d.vertices.empty() ? 0 : static_cast<int>(d.vertices[0].size());
        },
        [](const GraphDomain&) { return 2; },
        [](const CurveDomain&) { return 2; },
    }, v_);
}

bool Domain::is_convex() const {
    return std::visit(overloaded{
        [](const SimplexDomain&) { return true; },
        [](const BoxDomain&) { return true; },
        [](const LpBallDomain& d) { return d.p >= 2.0; },
        [](const PolytopeDomain&) { return true; },  // checked by validate()
        [](const GraphDomain& g) { return g.curvature == Curvature::ConcaveCap; },
        [](const CurveDomain&) { return false; },
    }, v_);
}

bool Domain::is_concave() const {
    return std::visit(overloaded{
        [](const SimplexDomain&) { return true; },
        [](const BoxDomain&) { return false; },
        [](const LpBallDomain& d) { return d.p <= 2.0; },
        [](const PolytopeDomain&) { return false; },
        [](const GraphDomain& g) { return g.curvature == Curvature::ConvexCup; },
        [](const CurveDomain&) { return true; },
    }, v_);
}

bool Domain::is_symmetric() const {
    return std::visit(overloaded{
        [](const SimplexDomain& d) {
            for (double a : d.scales) if (std::fabs(a - d.scales[0]) > 1e-12) return false;
            return true;
        },
        [](const BoxDomain& d) {
            for (double a : d.scales) if (std::fabs(a - d.scales[0]) > 1e-12) return false;
            return true;
        },
        [](const LpBallDomain&) { return true; },
        [](const PolytopeDomain& d) { return perm_closed(d.vertices, 1e-9); },
        [](const GraphDomain& g) { return g.symmetric; },
        [](const CurveDomain& c) {
            // sampled swap symmetry of the parametrized boundary
            double lo = c.curve->t_lo(), hi = c.curve->t_hi();
            for (int i = 0; i <= 32; ++i) {
                double t = lo + (hi - lo) * i / 32.0;
                Vec2 a = c.curve->point(t), b = c.curve->point(lo + hi - t);
                double scale = std::fabs(a[0]) + std::fabs(a[1]) + 1.0;
                if (std::fabs(a[0] - b[1]) > 1e-9 * scale) return false;
                if (std::fabs(a[1] - b[0]) > 1e-9 * scale) return false;
            }
            return true;
        },
    }, v_);
}

bool Domain::contains(const RealVec& pt, double tol) const {
    for (double x : pt) if (x < -tol) return false;
    return std::visit(overloaded{
        [&](const SimplexDomain& d) {
            double s = 0;
            for (std::size_t i = 0; i < d.scales.size(); ++i) s += pt[i] / d.scales[i];
            return s <= 1.0 + tol;
        },
        [&](const BoxDomain& d) {
            for (std::size_t i = 0; i < d.scales.size(); ++i)
                if (pt[i] > d.scales[i] + tol) return false;
            return true;
        },
        [&](const LpBallDomain& d) {
            double s = 0;
            for (int i = 0; i < d.n; ++i) s += std::pow(std::max(0.0, pt[i]), 0.5 * d.p);
            return s <= 1.0 + tol;
        },
        [&](const PolytopeDomain& d) {
            if (d.vertices.empty() || d.vertices[0].size() != 2)
                throw std::invalid_argument("polytope membership implemented for n=2 only");
            return point_in_hull2d(hull2d(d.vertices), pt, tol);
        },
        [&](const GraphDomain& g) {
            return pt[0] <= g.profile->lambda() + tol
                && pt[1] <= g.profile->value(std::clamp(pt[0], 0.0, g.profile->lambda())) + tol;
        },
        [&](const CurveDomain& c) {
            CurveGraphProfile prof(c.curve);
            return pt[0] <= prof.lambda() + tol
                && pt[1] <= prof.value(std::clamp(pt[0], 0.0, prof.lambda())) + tol;
        },
    }, v_);
}

std::string Domain::kind() const {
    return std::visit(overloaded{
        [](const SimplexDomain&) { return std::string("simplex"); },
        [](const BoxDomain&) { return std::string("box"); },
        [](const LpBallDomain&) { return std::string("lpball"); },
        [](const PolytopeDomain&) { return std::string("polytope"); },
        [](const GraphDomain&) { return std::string("graph"); },
        [](const CurveDomain&) { return std::string("curve"); },
    }, v_);
}

double area(const Domain& dom) {
    return std::visit(overloaded{
        [](const SimplexDomain& d) {
            double v = 1.0;
            for (double a : d.scales) v *= a;
            for (std::size_t i = 2; i <= d.scales.size(); ++i) v /= static_cast<double>(i);
            return v;
        },
        [](const BoxDomain& d) {
            double v = 1.0;
            for (double a : d.scales) v *= a;
            return v;
        },
        [](const LpBallDomain& d) {
            // vol{x >= 0 : sum x_i^q <= 1} = Gamma(1+1/q)^n / Gamma(1+n/q), q = p/2
            double inv_q = 2.0 / d.p;
            return std::exp(d.n * std::lgamma(1.0 + inv_q) - std::lgamma(1.0 + d.n * inv_q));
        },
        [](const PolytopeDomain& d) {
            if (d.vertices.empty() || d.vertices[0].size() != 2)
                throw std::invalid_argument("polytope area implemented for n=2 only");
            auto h = hull2d(d.vertices);
            double s = 0;
            for (std::size_t i = 0; i < h.size(); ++i) {
                const auto& a = h[i];
                const auto& b = h[(i + 1) % h.size()];
                s += a[0] * b[1] - b[0] * a[1];
            }
            return 0.5 * std::fabs(s);
        },
        [](const GraphDomain& g) {
            if (auto* poly = dynamic_cast<const PolylineProfile*>(g.profile.get())) {
                double s = 0;
                const auto& pts = poly->points();
                for (std::size_t i = 1; i < pts.size(); ++i)
                    s += 0.5 * (pts[i - 1].second + pts[i].second) * (pts[i].first - pts[i - 1].first);
                return s;
            }
            if (auto* cg = dynamic_cast<const CurveGraphProfile*>(g.profile.get())) {
                const Curve& c = *cg->curve();
                return adaptive_simpson([&](double t) {
                    return c.point(t)[1] * c.tangent(t)[0];
                }, c.t_lo(), c.t_hi(), 1e-12);
            }
            return adaptive_simpson([&](double x) { return g.profile->value(x); },
                                    0.0, g.profile->lambda(), 1e-11);
        },
        [](const CurveDomain& cd) {
            const Curve& c = *cd.curve;
            return adaptive_simpson([&](double t) {
                return c.point(t)[1] * c.tangent(t)[0];
            }, c.t_lo(), c.t_hi(), 1e-12);
        },
    }, dom.variant());
}

double fixed_point(const GraphDomain& g) {
    double lam = g.profile->lambda();
    if (g.profile->value(0.0) <= 0.0)
        throw std::invalid_argument("fixed_point: profile must satisfy f(0) > 0");
    double x = brent([&](double x) { return g.profile->value(x) - x; },
                     0.0, lam, 1e-14 * std::max(1.0, lam));
    return x;
}

ValidationReport validate(const Domain& dom) {
    ValidationReport rep;
    if (const auto* g = dom.get_if<GraphDomain>()) {
        const Profile& f = *g->profile;
        double lam = f.lambda();
        double want = g->curvature == Curvature::ConcaveCap ? -1.0 : 1.0;
        bool curv_ok = true, smooth = true, interior_smooth = true;
        if (auto* pp = dynamic_cast<const PerturbedProfile*>(&f)) {
            // the extension is an exact involution of the left half, whose
            // curvature sign it inherits; a dense cheap check on [0, x0]
            const int N = 10000;
            double x0 = pp->fixed_x();
            double prev = pp->left_slope(0.0);
            for (int i = 1; i <= N; ++i) {
                double s = pp->left_slope(x0 * i / N);
                if ((s - prev) * want < -1e-11 * lam) { curv_ok = false; break; }
                prev = s;
            }
        } else {
            const int N = 2048;
            for (int i = 1; i < N; ++i) {
                double x0 = lam * (i - 0.5) / N, x1 = lam * (i + 0.5) / N;
                double d2 = f.slope(x1) - f.slope(x0);
                if (std::isfinite(d2) && d2 * want < -1e-9 * lam) { curv_ok = false; break; }
            }
        }
        const int M = 256;
        for (int i = 1; i < M; ++i) {
            double s = f.slope(lam * i / M);
            if (!std::isfinite(s)) { smooth = false; interior_smooth = false; }
            else if (std::fabs(s) < 1e-6) smooth = false;
        }
        double s0 = f.slope(0.0), s1 = f.slope(lam);
        if (!std::isfinite(s0) || std::fabs(s0) < 1e-6) smooth = false;
        if (!std::isfinite(s1) || std::fabs(s1) < 1e-6) smooth = false;
        rep.curvature_ok = curv_ok;
        bool sym = true;
        for (int i = 0; i <= 64; ++i) {
            double x = lam * i / 64.0;
            if (std::fabs(f.value(f.value(x)) - x) > 1e-8 * std::max(1.0, lam)) { sym = false; break; }
        }
        if (auto* cg = dynamic_cast<const CurveGraphProfile*>(&f); cg && sym)
            sym = Domain::curve(cg->curve()).is_symmetric();
        rep.symmetric = sym;
        rep.smooth_boundary = smooth;
        // Symmetric closure: an axis endpoint with slope exactly 0 (mirror
        // slope -inf) still closes up smoothly, as for the round ball.
        rep.symmetric_closure_smooth =
            sym && interior_smooth && (smooth || std::fabs(s0) < 1e-9 || !std::isfinite(s1));
        rep.convex_ok = curv_ok;
        return rep;
    }
    if (const auto* c = dom.get_if<CurveDomain>()) {
        rep.symmetric = dom.is_symmetric();
        const Curve& cur = *c->curve;
        bool curv_ok = true, smooth = true;
        double prev_slope = -HUGE_VAL;
        for (int i = 1; i < 256; ++i) {
            double t = cur.t_lo() + (cur.t_hi() - cur.t_lo()) * i / 256.0;
            Vec2 d = cur.tangent(t);
            if (d[0] <= 0.0 || d[1] >= 0.0) smooth = false;
            double s = d[1] / d[0];
            if (s < prev_slope - 1e-9) curv_ok = false;  // slope must increase
            prev_slope = s;
        }
        rep.curvature_ok = curv_ok;
        rep.smooth_boundary = smooth;
        rep.symmetric_closure_smooth = rep.symmetric && smooth;
        return rep;
    }
    if (const auto* p = dom.get_if<PolytopeDomain>()) {
        rep.symmetric = perm_closed(p->vertices, 1e-9);
        std::size_t n = p->vertices.empty() ? 0 : p->vertices[0].size();
        if (n == 2) {
            // hat(Omega) convex iff Omega is downward closed in the quadrant:
            // check axis projections of every hull vertex stay inside
            auto h = hull2d(p->vertices);
            bool ok = true;
            for (const auto& v : h) {
                if (!point_in_hull2d(h, {v[0], 0.0}, 1e-9)) ok = false;
                if (!point_in_hull2d(h, {0.0, v[1]}, 1e-9)) ok = false;
            }
            rep.convex_ok = ok;
        } else {
            // sufficient test: the vertex list is closed under coordinate zeroing
            bool ok = true;
            for (const auto& v : p->vertices) {
                for (std::size_t mask = 1; mask < (1u << n); ++mask) {
                    RealVec z = v;
                    for (std::size_t i = 0; i < n; ++i)
                        if (mask & (1u << i)) z[i] = 0.0;
                    bool found = false;
                    for (const auto& w : p->vertices) {
                        double d = 0;
                        for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::fabs(z[i] - w[i]));
                        if (d <= 1e-9) { found = true; break; }
                    }
                    if (!found) { ok = false; break; }
                }
                if (!ok) break;
            }
            rep.convex_ok = ok;
            if (!ok) rep.detail = "vertex list not zeroing-closed (sufficient test)";
        }
        rep.curvature_ok = rep.convex_ok;
        return rep;
    }
    rep.curvature_ok = true;
    rep.convex_ok = true;
    rep.symmetric = dom.is_symmetric();
    rep.smooth_boundary = dom.get_if<LpBallDomain>() != nullptr;
    rep.symmetric_closure_smooth = rep.smooth_boundary && rep.symmetric;
    return rep;
}

} // namespace capax
