#include "capax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace capax {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// 1-D nested grid extremum of fn over [lo, hi].
double refine_1d(const std::function<double(double)>& fn, double lo, double hi,
                 bool want_max, const GridSpec& grid) {
    double best_x = lo, best = fn(lo);
    auto consider = [&](double x) {
        double v = fn(x);
        if ((want_max && v > best) || (!want_max && v < best)) { best = v; best_x = x; }
    };
    consider(hi);
    int res = std::max(grid.resolution, 8);
    double a = lo, b = hi;
    for (int depth = 0; depth < grid.refine_depth; ++depth) {
        double h = (b - a) / res;
        double local_x = best_x;
        for (int i = 0; i <= res; ++i) consider(a + i * h);
        (void)local_x;
        double na = std::max(lo, best_x - 2.0 * h);
        double nb = std::min(hi, best_x + 2.0 * h);
        a = na; b = nb;
        res = 16;
        if (h < 1e-10 * std::max(1.0, hi - lo)) break;
    }
    return best;
}

// 2-D nested grid extremum over [0,1]^2-parameterized patch.
double refine_2d(const std::function<double(double, double)>& fn, bool want_max,
                 const GridSpec& grid) {
    double ax = 0, bx = 1, ay = 0, by = 1;
    double best = fn(0, 0), bx_x = 0, bx_y = 0;
    auto consider = [&](double x, double y) {
        double v = fn(x, y);
        if ((want_max && v > best) || (!want_max && v < best)) {
            best = v; bx_x = x; bx_y = y;
        }
    };
    int res = std::max(grid.resolution, 8);
    for (int depth = 0; depth < grid.refine_depth; ++depth) {
        double hx = (bx - ax) / res, hy = (by - ay) / res;
        for (int i = 0; i <= res; ++i)
            for (int j = 0; j <= res; ++j)
                consider(ax + i * hx, ay + j * hy);
        ax = std::max(0.0, bx_x - 2.0 * hx);
        bx = std::min(1.0, bx_x + 2.0 * hx);
        ay = std::max(0.0, bx_y - 2.0 * hy);
        by = std::min(1.0, bx_y + 2.0 * hy);
        res = 12;
        if (hx < 1e-10 && hy < 1e-10) break;
    }
    return best;
}

void for_each_composition_brute(long long total, int n, long long low,
                                const std::function<void(const IntVec&)>& fn) {
    IntVec v(n, low);
    std::function<void(int, long long)> rec = [&](int i, long long rest) {
        if (i == n - 1) {
            v[i] = rest;
            if (rest >= low) fn(v);
            return;
        }
        for (long long c = low; c <= rest - low * (n - 1 - i); ++c) {
            v[i] = c;
            rec(i + 1, rest - c);
        }
    };
    rec(0, total);
}

} // namespace

double brute_support(const Domain& dom, const RealVec& v, bool want_max,
                     const GridSpec& grid) {
    int n = dom.dimension();
    return std::visit(overloaded{
        [&](const SimplexDomain& d) {
            if (n == 2) {
                // hypotenuse parametrized by x
                return refine_1d([&](double x) {
                    return v[0] * x + v[1] * d.scales[1] * (1.0 - x / d.scales[0]);
                }, 0.0, d.scales[0], want_max, grid);
            }
            return refine_2d([&](double u, double w) {
                double x = u * d.scales[0];
                double rem = 1.0 - x / d.scales[0];
                double y = w * rem * d.scales[1];
                double z = (rem - y / d.scales[1]) * d.scales[2];
                return v[0] * x + v[1] * y + v[2] * z;
            }, want_max, grid);
        },
        [&](const BoxDomain& d) {
            // positive boundary: union of top faces; extremum on a grid of each
            double best = want_max ? -HUGE_VAL : HUGE_VAL;
            for (int fixed = 0; fixed < n; ++fixed) {
                auto face = [&](const RealVec& x) {
                    double s = 0;
                    for (int i = 0; i < n; ++i) s += v[i] * x[i];
                    return s;
                };
                if (n == 2) {
                    double val = refine_1d([&](double t) {
                        RealVec x(2);
                        x[fixed] = d.scales[fixed];
                        x[1 - fixed] = t * d.scales[1 - fixed];
                        return face(x);
                    }, 0.0, 1.0, want_max, grid);
                    best = want_max ? std::max(best, val) : std::min(best, val);
                } else {
                    double val = refine_2d([&](double u, double w) {
                        RealVec x(3);
                        x[fixed] = d.scales[fixed];
                        x[(fixed + 1) % 3] = u * d.scales[(fixed + 1) % 3];
                        x[(fixed + 2) % 3] = w * d.scales[(fixed + 2) % 3];
                        return face(x);
                    }, want_max, grid);
                    best = want_max ? std::max(best, val) : std::min(best, val);
                }
            }
            return best;
        },
        [&](const LpBallDomain& d) {
            double q = 0.5 * d.p;
            if (n == 2) {
                return refine_1d([&](double x) {
                    double rem = 1.0 - std::pow(x, q);
                    double y = rem > 0 ? std::pow(rem, 1.0 / q) : 0.0;
                    return v[0] * x + v[1] * y;
                }, 0.0, 1.0, want_max, grid);
            }
            return refine_2d([&](double u, double w) {
                double x = u;
                double rem1 = 1.0 - std::pow(x, q);
                if (rem1 < 0) rem1 = 0;
                double ymax = std::pow(rem1, 1.0 / q);
                double y = w * ymax;
                double rem2 = rem1 - std::pow(y, q);
                double z = rem2 > 0 ? std::pow(rem2, 1.0 / q) : 0.0;
                return v[0] * x + v[1] * y + v[2] * z;
            }, want_max, grid);
        },
        [&](const PolytopeDomain& d) {
            double best = want_max ? -HUGE_VAL : HUGE_VAL;
            if (want_max) {
                for (const auto& vert : d.vertices) {
                    double s = 0;
                    for (int i = 0; i < n; ++i) s += v[i] * vert[i];
                    best = std::max(best, s);
                }
                return best;
            }
            if (n != 2)
                throw std::invalid_argument("brute_support: polytope min needs n=2");
            auto h = hull2d(d.vertices);
            std::size_t m = h.size();
            for (std::size_t i = 0; i < m; ++i) {
                const auto& a = h[i];
                const auto& b = h[(i + 1) % m];
                double mx = 0.5 * (a[0] + b[0]), my = 0.5 * (a[1] + b[1]);
                if (mx <= 1e-14 || my <= 1e-14) continue;
                best = std::min(best, std::min(v[0] * a[0] + v[1] * a[1],
                                               v[0] * b[0] + v[1] * b[1]));
            }
            return best;
        },
        [&](const GraphDomain& g) {
            return refine_1d([&](double x) {
                return v[0] * x + v[1] * g.profile->value(x);
            }, 0.0, g.profile->lambda(), want_max, grid);
        },
        [&](const CurveDomain& c) {
            return refine_1d([&](double t) {
                Vec2 p = c.curve->point(t);
                return v[0] * p[0] + v[1] * p[1];
            }, c.curve->t_lo(), c.curve->t_hi(), want_max, grid);
        },
    }, dom.variant());
}

double brute_gh(const Domain& dom, long long k, const GridSpec& grid) {
    int n = dom.dimension();
    if (n > 3) throw std::invalid_argument("brute_gh: n <= 3");
    if (k > 30) throw std::invalid_argument("brute_gh: k <= 30");
    bool convex = dom.is_convex();
    if (!convex && !dom.is_concave())
        throw std::invalid_argument("brute_gh: domain is neither convex nor concave");
    long long total = convex ? k : k + n - 1;
    long long low = convex ? 0 : 1;
    double best = convex ? HUGE_VAL : -HUGE_VAL;
    for_each_composition_brute(total, n, low, [&](const IntVec& iv) {
        RealVec v(iv.begin(), iv.end());
        double s = brute_support(dom, v, !convex ? false : true, grid);
        best = convex ? std::min(best, s) : std::max(best, s);
    });
    return best;
}

double sorted_multiset_ellipsoid(double a, long long k) {
    // k-th smallest element of {1,2,...} merged with {a,2a,...}
    long long i = 1, j = 1;
    double val = 0;
    for (long long c = 0; c < k; ++c) {
        double x = static_cast<double>(i), y = a * static_cast<double>(j);
        if (x <= y) { val = x; ++i; } else { val = y; ++j; }
    }
    return val;
}

long long lattice_ech_ellipsoid(long long m, long long k) {
    if (m < 1 || k < 0)
        throw std::invalid_argument("lattice_ech_ellipsoid: m >= 1, k >= 0");
    long long bound = 2;
    std::vector<long long> vals;
    for (;;) {
        vals.clear();
        for (long long a = 0; a <= bound; ++a)
            for (long long bm = 0; a + bm <= bound; bm += m)
                vals.push_back(a + bm);
        if (static_cast<long long>(vals.size()) > k) break;
        bound *= 2;
    }
    std::sort(vals.begin(), vals.end());
    return vals[k];
}

BruteArea brute_area(const Domain& dom, int resolution) {
    if (dom.dimension() != 2)
        throw std::invalid_argument("brute_area: 2-D domains only");
    // bounding box via membership along the axes
    auto reach = [&](int axis) {
        double hi = 1.0;
        RealVec p(2, 0.0);
        for (; hi < 1e9; hi *= 2) {
            p[axis] = hi;
            if (!dom.contains(p)) break;
        }
        return hi;
    };
    double bx = reach(0), by = reach(1);
    double h = bx / resolution, hy = by / resolution;
    double count = 0;
    for (int i = 0; i < resolution; ++i) {
        double x = (i + 0.5) * h;
        for (int j = 0; j < resolution; ++j) {
            double y = (j + 0.5) * hy;
            if (dom.contains({x, y})) count += 1;
        }
    }
    double grid_value = count * h * hy;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> ux(0.0, bx), uy(0.0, by);
    const int samples = 400000;
    int hits = 0;
    for (int s = 0; s < samples; ++s)
        if (dom.contains({ux(rng), uy(rng)})) ++hits;
    double mc_value = bx * by * hits / samples;
    double mc_err = bx * by * std::sqrt(0.25 / samples) * 4.0;
    double grid_err = 2.0 * (bx + by) * std::max(h, hy);  // perimeter cells
    return {grid_value, mc_value, std::max(mc_err, grid_err)};
}

} // namespace capax
