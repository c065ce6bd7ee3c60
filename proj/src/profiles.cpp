#include "capax/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "capax/curves.hpp"
#include "capax/roots.hpp"

namespace capax {

PellipseProfile::PellipseProfile(double p, double a) : p_(p), a_(a) {
    if (p < 1.0 || a <= 0.0)
        throw std::invalid_argument("pellipse: need p >= 1 and a > 0");
}

double PellipseProfile::value(double x) const {
    if (x <= 0.0) return a_;
    if (x >= 1.0) return 0.0;
    return a_ * std::pow(1.0 - std::pow(x, p_), 1.0 / p_);
}

double PellipseProfile::slope(double x) const {
    if (x <= 0.0) return p_ > 1.0 ? 0.0 : -a_;
    if (x >= 1.0) return p_ > 1.0 ? -HUGE_VAL : -a_;
    double xp = std::pow(x, p_);
    return -a_ * std::pow(x, p_ - 1.0) * std::pow(1.0 - xp, 1.0 / p_ - 1.0);
}

double CircleProfile::value(double x) const {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return std::sqrt(1.0 - x * x);
}

double CircleProfile::slope(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return -HUGE_VAL;
    return -x / std::sqrt(1.0 - x * x);
}

LpBall2Profile::LpBall2Profile(double p) : p_(p) {
    if (p <= 0.0) throw std::invalid_argument("lpball2: need p > 0");
}

double LpBall2Profile::value(double x) const {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    double q = 0.5 * p_;
    return std::pow(1.0 - std::pow(x, q), 1.0 / q);
}

double LpBall2Profile::slope(double x) const {
    double q = 0.5 * p_;
    if (x <= 0.0) return q > 1.0 ? 0.0 : (q == 1.0 ? -1.0 : -HUGE_VAL);
    if (x >= 1.0) return q > 1.0 ? -HUGE_VAL : (q == 1.0 ? -1.0 : 0.0);
    double xq = std::pow(x, q);
    return -std::pow(x, q - 1.0) * std::pow(1.0 - xq, 1.0 / q - 1.0);
}

ConicProfile::ConicProfile(double b, double scale) : b_(b), scale_(scale) {
    if (b <= 0.0 || b == 1.0 || scale <= 0.0)
        throw std::invalid_argument("conic: need b > 0, b != 1, scale > 0");
}

double ConicProfile::value(double x) const {
    double u = x / scale_;
    if (u <= 0.0) return scale_;
    if (u >= 1.0) return 0.0;
    double c = b_ * b_ - 1.0;
    return scale_ * (-b_ * u + std::sqrt(1.0 + c * u * u));
}

double ConicProfile::slope(double x) const {
    double u = std::clamp(x / scale_, 0.0, 1.0);
    double c = b_ * b_ - 1.0;
    return -b_ + c * u / std::sqrt(1.0 + c * u * u);
}

PolylineProfile::PolylineProfile(std::vector<std::pair<double, double>> pts)
    : pts_(std::move(pts)) {
    if (pts_.size() < 2) throw std::invalid_argument("polyline: need >= 2 points");
    if (pts_.front().first != 0.0 || pts_.back().second != 0.0)
        throw std::invalid_argument("polyline: must run from the y-axis to the x-axis");
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        if (pts_[i].first < pts_[i - 1].first || pts_[i].second > pts_[i - 1].second)
            throw std::invalid_argument("polyline: points must be monotone");
    }
}

double PolylineProfile::value(double x) const {
    if (x <= pts_.front().first) return pts_.front().second;
    if (x >= pts_.back().first) return 0.0;
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
        [](double v, const std::pair<double, double>& pt) { return v < pt.first; });
    auto hi = *it, lo = *(it - 1);
    double w = (x - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

double PolylineProfile::slope(double x) const {
    if (x >= pts_.back().first) x = pts_.back().first - 1e-15 * pts_.back().first;
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
        [](double v, const std::pair<double, double>& pt) { return v < pt.first; });
    if (it == pts_.begin()) ++it;
    if (it == pts_.end()) --it;
    auto hi = *it, lo = *(it - 1);
    return (hi.second - lo.second) / (hi.first - lo.first);
}

CurveGraphProfile::CurveGraphProfile(std::shared_ptr<const Curve> curve)
    : curve_(std::move(curve)) {
    lambda_ = curve_->point(curve_->t_hi())[0];
    y_top_ = curve_->point(curve_->t_lo())[1];
}

double CurveGraphProfile::param_for_x(double x) const {
    double lo = curve_->t_lo(), hi = curve_->t_hi();
    if (x <= curve_->point(lo)[0]) return lo;
    if (x >= curve_->point(hi)[0]) return hi;
    return bisect([&](double t) { return curve_->point(t)[0] - x; }, lo, hi,
                  1e-14 * (hi - lo));
}

double CurveGraphProfile::value(double x) const {
    if (x <= 0.0) return y_top_;
    if (x >= lambda_) return 0.0;
    return curve_->point(param_for_x(x))[1];
}

double CurveGraphProfile::slope(double x) const {
    double t = param_for_x(std::clamp(x, 0.0, lambda_));
    Vec2 d = curve_->tangent(t);
    return d[1] / d[0];
}

} // namespace capax
