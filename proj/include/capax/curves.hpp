#pragma once

#include <array>
#include <memory>
#include <string>

#include "capax/profiles.hpp"

namespace capax {

using Vec2 = std::array<double, 2>;

// Parametric boundary arc of a 2-D moment region, traced from the vertical
// axis to the horizontal one: x strictly increasing, y strictly decreasing.
class Curve {
public:
    virtual ~Curve() = default;
    virtual double t_lo() const = 0;
    virtual double t_hi() const = 0;
    virtual Vec2 point(double t) const = 0;
    virtual Vec2 tangent(double t) const = 0;
    virtual std::string kind() const = 0;
};

using CurvePtr = std::shared_ptr<const Curve>;

// alpha(t) = (2 sin(t/2) - t cos(t/2), 2 sin(t/2) + (2pi - t) cos(t/2)),
// t in [0, 2pi]: the toric image of the Lagrangian bidisk.
class AlphaCurve final : public Curve {
public:
    double t_lo() const override { return 0.0; }
    double t_hi() const override { return 2.0 * pi; }
    Vec2 point(double t) const override;
    Vec2 tangent(double t) const override;
    std::string kind() const override { return "alpha"; }
    static constexpr double pi = 3.14159265358979323846;
};

// gamma(t) = alpha(t) - (eps, eps) on [xi, 2pi - xi], where xi solves
// 2 sin(xi/2) - xi cos(xi/2) = eps. Smooth-boundary version of the bidisk image.
class GammaEpsCurve final : public Curve {
public:
    explicit GammaEpsCurve(double eps);
    double t_lo() const override { return xi_; }
    double t_hi() const override { return 2.0 * AlphaCurve::pi - xi_; }
    Vec2 point(double t) const override;
    Vec2 tangent(double t) const override;
    std::string kind() const override { return "gamma-eps"; }
    double eps() const { return eps_; }
    double xi() const { return xi_; }
    // boundary slope dy/dx at parameter t is -(2pi - t)/t; inverse below
    static double param_for_slope(double s);
private:
    double eps_, xi_;
};

// The Ostrover-Ramos curve for the lp-sum of two Lagrangian disks:
//   s in [-vmax, 0]: (g_p(-s), -2pi s + g_p(-s)),
//   s in [0, vmax]:  (2pi s + g_p(s), g_p(s)),    vmax = (1/4)^(1/p),
// with g_p given by a quadrature (see or_gp in ghcap.hpp).
class OrCurve final : public Curve {
public:
    explicit OrCurve(double p);
    double t_lo() const override { return -vmax_; }
    double t_hi() const override { return vmax_; }
    Vec2 point(double t) const override;
    Vec2 tangent(double t) const override;
    std::string kind() const override { return "or-curve"; }
    double p() const { return p_; }
    double vmax() const { return vmax_; }
private:
    double p_, vmax_;
};

// Uniform scaling of a base curve by s > 0.
class ScaledCurve final : public Curve {
public:
    ScaledCurve(CurvePtr base, double s) : base_(std::move(base)), s_(s) {}
    double t_lo() const override { return base_->t_lo(); }
    double t_hi() const override { return base_->t_hi(); }
    Vec2 point(double t) const override;
    Vec2 tangent(double t) const override;
    std::string kind() const override { return "scaled"; }
    CurvePtr base() const { return base_; }
    double scale() const { return s_; }
private:
    CurvePtr base_;
    double s_;
};

// The Ostrover-Ramos function g_p and its derivative (quadrature-backed).
double or_gp(double p, double v);
double or_gp_prime(double p, double v);

// Graph of a profile viewed as a curve with parameter t = x.
class ProfileCurve final : public Curve {
public:
    explicit ProfileCurve(ProfilePtr p) : p_(std::move(p)) {}
    double t_lo() const override { return 0.0; }
    double t_hi() const override { return p_->lambda(); }
    Vec2 point(double t) const override { return {t, p_->value(t)}; }
    Vec2 tangent(double t) const override { return {1.0, p_->slope(t)}; }
    std::string kind() const override { return "profile-graph"; }
    ProfilePtr profile() const { return p_; }
private:
    ProfilePtr p_;
};

} // namespace capax
