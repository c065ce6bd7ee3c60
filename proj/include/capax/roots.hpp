#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace capax {

struct RootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brent's method on a bracketing interval [a,b] with f(a)*f(b) <= 0.
// Stops when the bracket is narrower than xtol. Throws RootError if the
// input does not bracket a sign change.
double brent(const std::function<double(double)>& f, double a, double b,
             double xtol = 1e-13, int max_iter = 200);

// Bisection variant used where f may be merely piecewise continuous.
double bisect(const std::function<double(double)>& f, double a, double b,
              double xtol = 1e-13, int max_iter = 400);

// Golden-section minimizer for a unimodal function on [a,b].
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-12);

} // namespace capax
