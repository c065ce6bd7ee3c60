#pragma once

#include <vector>

#include "capax/profiles.hpp"

namespace capax {

// C-infinity plateau piece: rises 0 -> height over [a,p1], flat on [p1,p2],
// falls back to 0 over [p2,b]. a == p1 (or p2 == b) collapses a ramp, letting
// the plateau touch the support edge. Ramps use the standard exp(-1/u)
// partition step, whose integral over a ramp is exactly half the ramp width.
struct SmoothTable {
    double a, p1, p2, b;
    double height;
    double value(double x) const;
    double deriv(double x) const;
    double integral() const;
};

// A bump is a finite sum of tables (positive plateau plus compensating
// troughs). Unit amplitude; amplitudes live in PerturbationSpec.
class Bump {
public:
    Bump() = default;
    explicit Bump(std::vector<SmoothTable> parts);
    double value(double x) const;
    double deriv(double x) const;
    double integral() const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    const std::vector<SmoothTable>& parts() const { return parts_; }
private:
    std::vector<SmoothTable> parts_;
    double lo_ = 0, hi_ = 0;
};

struct PerturbationSpec {
    Bump bump;
    double epsilon = 1.0;      // amplitude multiplier
    double plateau_lo = 0.0, plateau_hi = 0.0, plateau_height = 0.0;
    double integral = 0.0;     // of the unit-amplitude bump
};

// Assembles a bump with the requested support, plateau and integral. With a
// nonzero plateau and a different target integral, compensating troughs are
// added in the side zones (infeasible layouts throw).
PerturbationSpec make_bump(double support_lo, double support_hi,
                           double plateau_lo, double plateau_hi,
                           double plateau_height, double target_integral);

// Perturbed symmetric profile: g + sum eps_i b_i on [0, x(g)], extended to the
// unique symmetric profile beyond the fixed point (numerical inverse of the
// left half). The right endpoint moves when a bump is nonzero at x = 0.
class PerturbedProfile final : public Profile {
public:
    PerturbedProfile(ProfilePtr base, std::vector<PerturbationSpec> specs);
    double lambda() const override { return lambda_; }
    double value(double x) const override;
    double slope(double x) const override;
    std::string kind() const override { return "perturbed"; }
    ProfilePtr base() const { return base_; }
    const std::vector<PerturbationSpec>& specs() const { return specs_; }
    double fixed_x() const { return x0_; }
    double left_value(double x) const;   // g + sum eps b, valid on [0, x0]
    double left_slope(double x) const;
private:
    ProfilePtr base_;
    std::vector<PerturbationSpec> specs_;
    double x0_, lambda_;
};

} // namespace capax
