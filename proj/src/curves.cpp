#include "capax/curves.hpp"

#include <cmath>
#include <stdexcept>

#include "capax/quadrature.hpp"
#include "capax/roots.hpp"

namespace capax {

Vec2 AlphaCurve::point(double t) const {
    double s = std::sin(0.5 * t), c = std::cos(0.5 * t);
    return {2.0 * s - t * c, 2.0 * s + (2.0 * pi - t) * c};
}

Vec2 AlphaCurve::tangent(double t) const {
    double s = std::sin(0.5 * t), c = std::cos(0.5 * t);
    // d/dt[2 sin(t/2) - t cos(t/2)] = (t/2) sin(t/2), and similarly for y
    return {0.5 * t * s, -0.5 * (2.0 * pi - t) * s};
}

GammaEpsCurve::GammaEpsCurve(double eps) : eps_(eps) {
    if (eps <= 0.0 || eps >= 2.0)
        throw std::invalid_argument("gamma-eps: need 0 < eps < 2");
    xi_ = brent([&](double t) {
        return 2.0 * std::sin(0.5 * t) - t * std::cos(0.5 * t) - eps_;
    }, 1e-12, AlphaCurve::pi, 1e-15);
}

Vec2 GammaEpsCurve::point(double t) const {
    Vec2 p = AlphaCurve{}.point(t);
    return {p[0] - eps_, p[1] - eps_};
}

Vec2 GammaEpsCurve::tangent(double t) const { return AlphaCurve{}.tangent(t); }

double GammaEpsCurve::param_for_slope(double s) {
    // dy/dx = -(2pi - t)/t  =>  t = 2pi/(1 - s) for s < 0
    if (s >= 0.0) throw std::invalid_argument("param_for_slope: slope must be negative");
    return 2.0 * AlphaCurve::pi / (1.0 - s);
}

namespace {

double gp_integral(double p, double v) {
    double vmax = std::pow(0.25, 1.0 / p);
    if (v <= 0.0) v = 0.0;
    if (v >= vmax) return 0.0;
    double disc = std::sqrt(std::max(0.0, 0.25 - std::pow(v, p)));
    double lo = std::pow(0.5 - disc, 1.0 / p);
    double hi = std::pow(0.5 + disc, 1.0 / p);
    auto f = [&](double r) {
        double rad = std::pow(1.0 - std::pow(r, p), 2.0 / p) - v * v / (r * r);
        return std::sqrt(std::max(0.0, rad));
    };
    return 2.0 * tanh_sinh(f, lo, hi, 14);
}

} // namespace

double or_gp(double p, double v) { return gp_integral(p, v); }

double or_gp_prime(double p, double v) {
    // central differences; differentiating under the integral has endpoint
    // singularities (see the domain design notes)
    double vmax = std::pow(0.25, 1.0 / p);
    double h = 1e-6 * vmax;
    double a = std::max(0.0, v - h), b = std::min(vmax, v + h);
    return (gp_integral(p, b) - gp_integral(p, a)) / (b - a);
}

OrCurve::OrCurve(double p) : p_(p) {
    if (p < 1.0) throw std::invalid_argument("or-curve: need p >= 1");
    vmax_ = std::pow(0.25, 1.0 / p);
}

Vec2 OrCurve::point(double t) const {
    constexpr double two_pi = 2.0 * AlphaCurve::pi;
    if (t <= 0.0) {
        double g = or_gp(p_, -t);
        return {g, -two_pi * t + g};
    }
    double g = or_gp(p_, t);
    return {two_pi * t + g, g};
}

Vec2 OrCurve::tangent(double t) const {
    constexpr double two_pi = 2.0 * AlphaCurve::pi;
    if (t <= 0.0) {
        double gp = or_gp_prime(p_, -t);
        return {-gp, two_pi - gp};
    }
    double gp = or_gp_prime(p_, t);
    return {two_pi + gp, gp};
}

Vec2 ScaledCurve::point(double t) const {
    Vec2 p = base_->point(t);
    return {s_ * p[0], s_ * p[1]};
}

Vec2 ScaledCurve::tangent(double t) const {
    Vec2 d = base_->tangent(t);
    return {s_ * d[0], s_ * d[1]};
}

} // namespace capax
