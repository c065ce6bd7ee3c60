#include "capax/support.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "capax/roots.hpp"

namespace capax {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void check_v(const Domain& dom, const RealVec& v, bool positive) {
    if (static_cast<int>(v.size()) != dom.dimension())
        throw std::invalid_argument("support: dimension mismatch");
    double total = 0;
    for (double c : v) {
        if (c < 0) throw std::invalid_argument("support: v must be nonnegative");
        if (positive && c < 1.0 - 1e-12)
            throw std::invalid_argument("support_min: v components must be >= 1");
        total += c;
    }
    if (total == 0) throw std::invalid_argument("support: v must be nonzero");
}

// Extremum of <v, c(t)> over a curve arc with monotone boundary slope.
// phi'(t) = <v, c'(t)> changes sign at most once; bracket it, then compare
// with the endpoints.
SupportResult curve_extremum(const Curve& c, const RealVec& v, bool want_max) {
    double lo = c.t_lo(), hi = c.t_hi();
    auto val = [&](double t) {
        Vec2 p = c.point(t);
        return v[0] * p[0] + v[1] * p[1];
    };
    auto deriv = [&](double t) {
        Vec2 d = c.tangent(t);
        return v[0] * d[0] + v[1] * d[1];
    };
    double best_t = lo, best = val(lo);
    double vh = val(hi);
    if ((want_max && vh > best) || (!want_max && vh < best)) { best = vh; best_t = hi; }
    double eps = 1e-9 * (hi - lo);
    double dlo = deriv(lo + eps), dhi = deriv(hi - eps);
    if (dlo * dhi < 0) {
        double ts = brent([&](double t) { return deriv(t); }, lo + eps, hi - eps,
                          1e-13 * (hi - lo));
        double vs = val(ts);
        if ((want_max && vs > best) || (!want_max && vs < best)) { best = vs; best_t = ts; }
    }
    Vec2 w = c.point(best_t);
    return {best, {w[0], w[1]}};
}

SupportResult polyline_extremum(const PolylineProfile& poly, const RealVec& v, bool want_max) {
    double best = want_max ? -HUGE_VAL : HUGE_VAL;
    RealVec witness{0, 0};
    for (const auto& pt : poly.points()) {
        double s = v[0] * pt.first + v[1] * pt.second;
        if ((want_max && s > best) || (!want_max && s < best)) {
            best = s;
            witness = {pt.first, pt.second};
        }
    }
    return {best, witness};
}

SupportResult graph_extremum(const GraphDomain& g, const RealVec& v, bool want_max) {
    if (auto* poly = dynamic_cast<const PolylineProfile*>(g.profile.get()))
        return polyline_extremum(*poly, v, want_max);
    if (auto* cg = dynamic_cast<const CurveGraphProfile*>(g.profile.get()))
        return curve_extremum(*cg->curve(), v, want_max);
    ProfileCurve pc(g.profile);
    return curve_extremum(pc, v, want_max);
}

SupportResult dispatch(const Domain& dom, const RealVec& v, bool want_max) {
    return std::visit(overloaded{
        [&](const SimplexDomain& d) {
            // linear functional on the simplex face: extreme at a vertex a_i e_i
            std::size_t best_i = 0;
            double best = want_max ? -HUGE_VAL : HUGE_VAL;
            for (std::size_t i = 0; i < d.scales.size(); ++i) {
                double s = v[i] * d.scales[i];
                if ((want_max && s > best) || (!want_max && s < best)) { best = s; best_i = i; }
            }
            RealVec w(d.scales.size(), 0.0);
            w[best_i] = d.scales[best_i];
            return SupportResult{best, w};
        },
        [&](const BoxDomain& d) {
            if (!want_max)
                throw std::invalid_argument("support_min: box domains are not concave");
            double s = 0;
            for (std::size_t i = 0; i < d.scales.size(); ++i) s += v[i] * d.scales[i];
            return SupportResult{s, d.scales};
        },
        [&](const LpBallDomain& d) {
            if (d.p == 2.0) {
                std::size_t best_i = 0;
                double best = want_max ? -HUGE_VAL : HUGE_VAL;
                for (int i = 0; i < d.n; ++i)
                    if ((want_max && v[i] > best) || (!want_max && v[i] < best)) {
                        best = v[i]; best_i = i;
                    }
                RealVec w(d.n, 0.0);
                w[best_i] = 1.0;
                return SupportResult{best, w};
            }
            // critical point of <v,.> on the boundary graph (Lagrange):
            // x_j = v_j^(2/(p-2)) / (sum v_i^(p/(p-2)))^(2/p); value is the
            // corresponding lp-type mean of v. Holds for max when p > 2 and
            // for min (v >= 1) when p < 2.
            double e = d.p / (d.p - 2.0);
            double sum = 0;
            for (int i = 0; i < d.n; ++i)
                sum += v[i] > 0 ? std::pow(v[i], e) : 0.0;
            double value = std::pow(sum, (d.p - 2.0) / d.p);
            RealVec w(d.n, 0.0);
            for (int i = 0; i < d.n; ++i)
                w[i] = v[i] > 0 ? std::pow(v[i], 2.0 / (d.p - 2.0)) / std::pow(sum, 2.0 / d.p) : 0.0;
            if (want_max && d.p < 2.0)
                throw std::invalid_argument("support_max: lp ball with p < 2 is not convex");
            if (!want_max && d.p > 2.0)
                throw std::invalid_argument("support_min: lp ball with p > 2 is not concave");
            // zero components of v push the witness onto a face; the reduced
            // problem has the same closed form, already encoded by w_i = 0.
            return SupportResult{value, w};
        },
        [&](const PolytopeDomain& d) {
            if (want_max) {
                double best = -HUGE_VAL;
                RealVec witness;
                for (const auto& vert : d.vertices) {
                    double s = 0;
                    for (std::size_t i = 0; i < vert.size(); ++i) s += v[i] * vert[i];
                    if (s > best) { best = s; witness = vert; }
                }
                return SupportResult{best, witness};
            }
            // min over the positive boundary chain; vertices interior to the
            // axes (like the origin) are not on it
            if (d.vertices[0].size() != 2)
                throw std::invalid_argument("support_min: polytopes supported for n=2 only");
            auto h = hull2d(d.vertices);
            double best = HUGE_VAL;
            RealVec witness;
            std::size_t m = h.size();
            for (std::size_t i = 0; i < m; ++i) {
                const auto& a = h[i];
                const auto& b = h[(i + 1) % m];
                // edge of the upper-right chain: its midpoint leaves the axes
                double mx = 0.5 * (a[0] + b[0]), my = 0.5 * (a[1] + b[1]);
                if (mx <= 1e-14 || my <= 1e-14) continue;
                for (const auto& pt : {a, b}) {
                    double s = v[0] * pt[0] + v[1] * pt[1];
                    if (s < best) { best = s; witness = pt; }
                }
            }
            if (witness.empty())
                throw std::invalid_argument("support_min: polytope has no positive boundary");
            return SupportResult{best, witness};
        },
        [&](const GraphDomain& g) { return graph_extremum(g, v, want_max); },
        [&](const CurveDomain& c) { return curve_extremum(*c.curve, v, want_max); },
    }, dom.variant());
}

RealVec to_real(const IntVec& v) {
    RealVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<double>(v[i]);
    return r;
}

} // namespace

SupportResult support_max(const Domain& dom, const RealVec& v) {
    check_v(dom, v, false);
    return dispatch(dom, v, true);
}

SupportResult support_min(const Domain& dom, const RealVec& v) {
    check_v(dom, v, true);
    if (!dom.is_concave())
        throw std::invalid_argument("support_min: domain is not concave");
    return dispatch(dom, v, false);
}

SupportResult support_max(const Domain& dom, const IntVec& v) {
    return support_max(dom, to_real(v));
}

SupportResult support_min(const Domain& dom, const IntVec& v) {
    return support_min(dom, to_real(v));
}

} // namespace capax
