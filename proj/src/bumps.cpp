#include "capax/bumps.hpp"

#include <cmath>
#include <stdexcept>

#include "capax/domains.hpp"
#include "capax/roots.hpp"

namespace capax {

namespace {

// sigma(u) = exp(-1/u) for u > 0, else 0; step(u) = sigma(u)/(sigma(u)+sigma(1-u))
double sigma(double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; }

double step(double u) {
    if (u <= 0) return 0.0;
    if (u >= 1) return 1.0;
    double A = sigma(u), B = sigma(1.0 - u);
    return A / (A + B);
}

double step_deriv(double u) {
    if (u <= 0 || u >= 1) return 0.0;
    double A = sigma(u), B = sigma(1.0 - u);
    double S = A + B;
    return A * B * (1.0 / (u * u) + 1.0 / ((1.0 - u) * (1.0 - u))) / (S * S);
}

} // namespace

double SmoothTable::value(double x) const {
    if (x <= a || x >= b) {
        if (a == p1 && x <= a) return x < a ? 0.0 : height;
        if (p2 == b && x >= b) return x > b ? 0.0 : height;
        return 0.0;
    }
    if (x < p1) return height * step((x - a) / (p1 - a));
    if (x <= p2) return height;
    return height * step((b - x) / (b - p2));
}

double SmoothTable::deriv(double x) const {
    if (x <= a || x >= b) return 0.0;
    if (x < p1) return height * step_deriv((x - a) / (p1 - a)) / (p1 - a);
    if (x <= p2) return 0.0;
    return -height * step_deriv((b - x) / (b - p2)) / (b - p2);
}

double SmoothTable::integral() const {
    // the step is symmetric about 1/2, so each ramp contributes half its width
    return height * ((p2 - p1) + 0.5 * (p1 - a) + 0.5 * (b - p2));
}

Bump::Bump(std::vector<SmoothTable> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("bump: no parts");
    lo_ = parts_[0].a;
    hi_ = parts_[0].b;
    for (const auto& t : parts_) {
        if (t.a > t.p1 || t.p1 > t.p2 || t.p2 > t.b)
            throw std::invalid_argument("bump: malformed table");
        lo_ = std::min(lo_, t.a);
        hi_ = std::max(hi_, t.b);
    }
}

double Bump::value(double x) const {
    double s = 0;
    for (const auto& t : parts_) s += t.value(x);
    return s;
}

double Bump::deriv(double x) const {
    double s = 0;
    for (const auto& t : parts_) s += t.deriv(x);
    return s;
}

double Bump::integral() const {
    double s = 0;
    for (const auto& t : parts_) s += t.integral();
    return s;
}

PerturbationSpec make_bump(double support_lo, double support_hi,
                           double plateau_lo, double plateau_hi,
                           double plateau_height, double target_integral) {
    if (!(support_lo < support_hi))
        throw std::invalid_argument("make_bump: empty support");
    double width = support_hi - support_lo;
    std::vector<SmoothTable> parts;
    if (plateau_height == 0.0 && plateau_lo == plateau_hi) {
        // plain bump: plateau defaults to the middle third, height from integral
        double p1 = support_lo + width / 3.0, p2 = support_hi - width / 3.0;
        SmoothTable t{support_lo, p1, p2, support_hi, 1.0};
        double h = target_integral / t.integral();
        if (h == 0.0) throw std::invalid_argument("make_bump: zero bump requested");
        t.height = h;
        parts.push_back(t);
        PerturbationSpec spec;
        spec.bump = Bump(std::move(parts));
        spec.plateau_lo = p1;
        spec.plateau_hi = p2;
        spec.plateau_height = h;
        spec.integral = spec.bump.integral();
        return spec;
    }
    if (!(support_lo <= plateau_lo && plateau_lo < plateau_hi && plateau_hi <= support_hi))
        throw std::invalid_argument("make_bump: plateau must sit inside the support");
    // main table ramps over half of each side zone; troughs take the rest
    double left = plateau_lo - support_lo, right = support_hi - plateau_hi;
    SmoothTable main{plateau_lo - 0.5 * left, plateau_lo, plateau_hi,
                     plateau_hi + 0.5 * right, plateau_height};
    parts.push_back(main);
    double deficit = target_integral - main.integral();
    if (deficit != 0.0) {
        std::vector<SmoothTable> troughs;
        auto add_trough = [&](double lo, double hi) {
            if (hi - lo < 1e-9 * width) return;
            double w = hi - lo;
            troughs.push_back({lo, lo + w / 3.0, hi - w / 3.0, hi, 1.0});
        };
        add_trough(support_lo, plateau_lo - 0.55 * left);
        add_trough(plateau_hi + 0.55 * right, support_hi);
        double cap = 0;
        for (const auto& t : troughs) cap += t.integral();
        if (cap == 0.0)
            throw std::invalid_argument("make_bump: no room for compensating lobes");
        for (auto t : troughs) {
            t.height = deficit / cap;
            parts.push_back(t);
        }
    }
    PerturbationSpec spec;
    spec.bump = Bump(std::move(parts));
    spec.plateau_lo = plateau_lo;
    spec.plateau_hi = plateau_hi;
    spec.plateau_height = plateau_height;
    spec.integral = spec.bump.integral();
    return spec;
}

PerturbedProfile::PerturbedProfile(ProfilePtr base, std::vector<PerturbationSpec> specs)
    : base_(std::move(base)), specs_(std::move(specs)) {
    GraphDomain g{base_, Curvature::ConcaveCap, true};  // curvature unused here
    x0_ = fixed_point(g);
    for (const auto& s : specs_) {
        if (s.bump.support_hi() > x0_ + 1e-12)
            throw std::invalid_argument("perturbation support must end before the fixed point");
    }
    lambda_ = left_value(0.0);
}

double PerturbedProfile::left_value(double x) const {
    double v = base_->value(x);
    for (const auto& s : specs_) v += s.epsilon * s.bump.value(x);
    return v;
}

double PerturbedProfile::left_slope(double x) const {
    double v = base_->slope(x);
    for (const auto& s : specs_) v += s.epsilon * s.bump.deriv(x);
    return v;
}

double PerturbedProfile::value(double x) const {
    if (x <= x0_) return x < 0 ? lambda_ : left_value(x);
    if (x >= lambda_) return 0.0;
    // symmetric extension: invert the (strictly decreasing) left half
    double y = bisect([&](double y) { return left_value(y) - x; }, 0.0, x0_,
                      1e-15 * std::max(1.0, x0_));
    return y;
}

double PerturbedProfile::slope(double x) const {
    if (x <= x0_) return left_slope(x);
    if (x >= lambda_) {
        double s = left_slope(0.0);
        return s == 0.0 ? -HUGE_VAL : 1.0 / s;
    }
    double y = value(x);
    double s = left_slope(y);
    return s == 0.0 ? -HUGE_VAL : 1.0 / s;
}

} // namespace capax
