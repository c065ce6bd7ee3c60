#pragma once

#include <memory>
#include <string>
#include <vector>

namespace capax {

// A profile is the decreasing function whose graph, together with the axes,
// bounds the moment region of a 2-D toric domain. Profiles come from a fixed
// catalog of named evaluators so that domain specs stay serializable.
class Profile {
public:
    virtual ~Profile() = default;
    virtual double lambda() const = 0;            // right endpoint: value(lambda)=0
    virtual double value(double x) const = 0;
    virtual double slope(double x) const = 0;
    virtual std::string kind() const = 0;
};

using ProfilePtr = std::shared_ptr<const Profile>;

// f(x) = a (1 - x^p)^(1/p) on [0,1]. Concave-cap for p > 1.
class PellipseProfile final : public Profile {
public:
    PellipseProfile(double p, double a);
    double lambda() const override { return 1.0; }
    double value(double x) const override;
    double slope(double x) const override;
    std::string kind() const override { return "pellipse"; }
    double p() const { return p_; }
    double a() const { return a_; }
private:
    double p_, a_;
};

// f(x) = sqrt(1 - x^2): the quarter circle (moment image of the round ball).
class CircleProfile final : public Profile {
public:
    double lambda() const override { return 1.0; }
    double value(double x) const override;
    double slope(double x) const override;
    std::string kind() const override { return "circle"; }
};

// f(x) = (1 - x^(p/2))^(2/p): boundary graph of the lp-ball moment image B^2_p.
// Concave-cap for p > 2, convex-cup for p < 2.
class LpBall2Profile final : public Profile {
public:
    explicit LpBall2Profile(double p);
    double lambda() const override { return 1.0; }
    double value(double x) const override;
    double slope(double x) const override;
    std::string kind() const override { return "lpball2"; }
    double p() const { return p_; }
private:
    double p_;
};

// Conic arc through (0,a) and (a,0) with endpoint slope -b, symmetric under
// coordinate swap: f(x) = a*g(x/a), g(u) = -b*u + sqrt(1 + (b^2-1)u^2).
// b < 1 gives a concave cap (ellipse arc), b > 1 a convex cup (hyperbola arc).
// The only catalog profile that is symmetric with endpoint slopes strictly
// between 0 and -1, which the smooth-boundary constructions need.
class ConicProfile final : public Profile {
public:
    ConicProfile(double b, double scale = 1.0);
    double lambda() const override { return scale_; }
    double value(double x) const override;
    double slope(double x) const override;
    std::string kind() const override { return "conic"; }
    double b() const { return b_; }
    double scale() const { return scale_; }
private:
    double b_, scale_;
};

// Piecewise-linear profile through the given vertices; x strictly increasing,
// first point on the y-axis, last point on the x-axis.
class PolylineProfile final : public Profile {
public:
    explicit PolylineProfile(std::vector<std::pair<double, double>> pts);
    double lambda() const override { return pts_.back().first; }
    double value(double x) const override;
    double slope(double x) const override;   // one-sided at the breakpoints
    std::string kind() const override { return "polyline"; }
    const std::vector<std::pair<double, double>>& points() const { return pts_; }
private:
    std::vector<std::pair<double, double>> pts_;
};

class Curve;  // curves.hpp

// Graph of a parametric boundary curve: value(x) inverts the first coordinate.
class CurveGraphProfile final : public Profile {
public:
    explicit CurveGraphProfile(std::shared_ptr<const Curve> curve);
    double lambda() const override { return lambda_; }
    double value(double x) const override;
    double slope(double x) const override;
    std::string kind() const override { return "curve-graph"; }
    std::shared_ptr<const Curve> curve() const { return curve_; }
    double param_for_x(double x) const;
private:
    std::shared_ptr<const Curve> curve_;
    double lambda_, y_top_;
};

} // namespace capax
