#pragma once

#include <functional>
#include <stdexcept>

namespace capax {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Simpson on [a,b]. Subdivision concentrates automatically near
// endpoint singularities (integrable ones, e.g. sqrt-type); depth is capped
// and exceeding it with a non-small error estimate throws.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 52);

// tanh-sinh (double exponential) rule on (a,b); robust for endpoint
// singularities of the sqrt kind that appear in the g_p integrand.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 int levels = 12);

} // namespace capax
