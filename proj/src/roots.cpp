#include "capax/roots.hpp"

#include <cmath>
#include <utility>

namespace capax {

double brent(const std::function<double(double)>& f, double a, double b,
             double xtol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw RootError("brent: endpoints do not bracket a root");

    if (std::fabs(fa) < std::fabs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    double c = a, fc = fa, d = b - a;
    bool mflag = true;

    for (int it = 0; it < max_iter; ++it) {
        if (fb == 0.0 || std::fabs(b - a) < xtol) return b;
        double s;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc))
              + b * fa * fc / ((fb - fa) * (fb - fc))
              + c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        double lo = 0.25 * (3.0 * a + b), hi = b;
        if (lo > hi) std::swap(lo, hi);
        bool bad = (s < lo || s > hi)
                || (mflag && std::fabs(s - b) >= 0.5 * std::fabs(b - c))
                || (!mflag && std::fabs(s - b) >= 0.5 * std::fabs(d))
                || (mflag && std::fabs(b - c) < xtol)
                || (!mflag && std::fabs(d) < xtol);
        if (bad) { s = 0.5 * (a + b); mflag = true; } else { mflag = false; }

        double fs = f(s);
        d = b - c;
        c = b; fc = fb;
        if ((fa > 0) != (fs > 0)) { b = s; fb = fs; }
        else                      { a = s; fa = fs; }
        if (std::fabs(fa) < std::fabs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    }
    return b;
}

double bisect(const std::function<double(double)>& f, double a, double b,
              double xtol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw RootError("bisect: endpoints do not bracket a root");
    for (int it = 0; it < max_iter && std::fabs(b - a) > xtol; ++it) {
        double m = 0.5 * (a + b), fm = f(m);
        if (fm == 0.0) return m;
        if ((fa > 0) == (fm > 0)) { a = m; fa = fm; } else { b = m; fb = fm; }
    }
    return 0.5 * (a + b);
}

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol) {
    constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) { b = d; d = c; fd = fc; c = b - gr * (b - a); fc = f(c); }
        else         { a = c; c = d; fc = fd; d = a + gr * (b - a); fd = f(d); }
    }
    return 0.5 * (a + b);
}

} // namespace capax
