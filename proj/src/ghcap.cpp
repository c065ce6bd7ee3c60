#include "capax/ghcap.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "capax/roots.hpp"

namespace capax {

namespace {

constexpr double kPi = 3.14159265358979323846;

double comb(long long n, long long r) {
    double c = 1.0;
    for (long long i = 1; i <= r; ++i) c *= static_cast<double>(n - r + i) / i;
    return c;
}

// Enumerate compositions of total into n parts (each >= low) in colex order.
void for_each_composition(long long total, int n, long long low,
                          const std::function<void(const IntVec&)>& fn) {
    IntVec v(n, low);
    long long rest = total - low * n;
    if (rest < 0) return;
    v[0] += rest;
    for (;;) {
        fn(v);
        // colex successor: move one unit from the lowest nonzero "free" slot
        int i = 0;
        while (i < n - 1 && v[i] == low) ++i;
        if (i == n - 1) break;
        long long free_i = v[i] - low;
        v[i] = low;
        v[i + 1] += 1;
        v[0] += free_i - 1;
    }
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

IntVec balanced_vector(long long k, int n, Mode mode) {
    if (k < 1 || n < 1) throw std::invalid_argument("balanced_vector: k, n >= 1");
    if (mode == Mode::Convex) {
        long long q = k / n, r = k % n;
        IntVec v(n, q);
        for (int i = 0; i < r; ++i) v[n - 1 - i] = q + 1;
        return v;
    }
    long long kk = k + n - 1;
    long long q = kk / n, r = kk % n;
    IntVec v(n, q);
    for (int i = 0; i < r; ++i) v[i] = q + 1;
    return v;
}

IntVec transfer(const IntVec& v, Mode mode) {
    int n = static_cast<int>(v.size());
    if (mode == Mode::Convex) {
        if (!std::is_sorted(v.begin(), v.end()))
            throw std::invalid_argument("transfer: input must be ordered");
        IntVec w = v;
        if (w[n - 1] > w[0] + 1) {
            w[0] += 1;
            w[n - 1] -= 1;
            std::sort(w.begin(), w.end());
        }
        return w;
    }
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>()))
        throw std::invalid_argument("transfer: input must be ordered backwards");
    IntVec w = v;
    if (w[0] > w[n - 1] + 1) {
        w[0] -= 1;
        w[n - 1] += 1;
        std::sort(w.begin(), w.end(), std::greater<>());
    }
    return w;
}

JkClassification classify_jk(double slope, long long k) {
    if (k < 2) throw std::invalid_argument("classify_jk: k >= 2");
    if (slope > 0) throw std::invalid_argument("classify_jk: slope must be <= 0");
    if (slope <= -static_cast<double>(k - 1)) return {k, k - 1, slope};
    double a = -slope;
    long long j = static_cast<long long>(std::floor(a * k / (1.0 + a)));
    // boundary landing: right endpoints are closed, left open
    auto right_end = [&](long long jj) { return -static_cast<double>(jj) / (k - jj); };
    while (j > 0 && slope > right_end(j)) --j;
    while (j < k - 2 && slope <= right_end(j + 1)) ++j;
    if (j < 0) j = 0;
    if (j > k - 1) j = k - 1;
    return {k, j, slope};
}

CapacityRecord gh_general(const Domain& dom, long long k) {
    if (k < 1) throw std::invalid_argument("gh_general: k >= 1");
    int n = dom.dimension();
    bool convex = dom.is_convex();
    if (!convex && !dom.is_concave())
        throw std::invalid_argument("gh_general: domain is neither convex nor concave");
    long long total = convex ? k : k + n - 1;
    long long low = convex ? 0 : 1;
    double count = comb(total - low * n + n - 1, n - 1);
    if (count > 1e7)
        throw std::invalid_argument("gh_general: composition count exceeds 1e7");

    CapacityRecord best;
    best.k = k;
    best.value = convex ? HUGE_VAL : -HUGE_VAL;
    for_each_composition(total, n, low, [&](const IntVec& v) {
        SupportResult r = convex ? support_max(dom, v) : support_min(dom, v);
        bool better = convex ? r.value < best.value - 1e-12
                             : r.value > best.value + 1e-12;
        bool tie = std::fabs(r.value - best.value) <= 1e-12;
        if (better || (tie && lex_less(v, best.carrier_vector))) {
            best.value = r.value;
            best.carrier_vector = v;
            best.carrier_point = r.witness;
        }
    });
    return best;
}

CapacityRecord gh_symmetric(const Domain& dom, long long k) {
    if (!dom.is_symmetric())
        throw std::invalid_argument("gh_symmetric: domain is not symmetric");
    int n = dom.dimension();
    CapacityRecord rec;
    rec.k = k;
    if (dom.is_convex()) {
        rec.carrier_vector = balanced_vector(k, n, Mode::Convex);
        SupportResult r = support_max(dom, rec.carrier_vector);
        rec.value = r.value;
        rec.carrier_point = r.witness;
    } else if (dom.is_concave()) {
        rec.carrier_vector = balanced_vector(k, n, Mode::Concave);
        SupportResult r = support_min(dom, rec.carrier_vector);
        rec.value = r.value;
        rec.carrier_point = r.witness;
    } else {
        throw std::invalid_argument("gh_symmetric: domain is neither convex nor concave");
    }
    return rec;
}

namespace {

// x with f'(x) = target, bracketed on (0, lam); slope is monotone.
double slope_root(const Profile& f, double target, double lam) {
    auto fn = [&](double x) {
        double s = f.slope(x);
        if (!std::isfinite(s)) s = s > 0 ? 1e300 : -1e300;
        return s - target;
    };
    return bisect(fn, 1e-15 * lam, lam * (1.0 - 1e-15), 1e-14 * lam);
}

} // namespace

CapacityRecord gh_graph_convex(const GraphDomain& g, long long k) {
    const Profile& f = *g.profile;
    if (g.curvature != Curvature::ConcaveCap)
        throw std::invalid_argument("gh_graph_convex: profile must be a concave cap");
    if (std::fabs(f.lambda() - 1.0) > 1e-12 || f.value(0.0) < 1.0 - 1e-12)
        throw std::invalid_argument("gh_graph_convex: profile not in class V");
    CapacityRecord rec;
    rec.k = k;
    if (k == 1) {
        rec.value = 1.0;
        if (f.value(0.0) <= 1.0 + 1e-12) {
            rec.carrier_vector = {0, 1};
            rec.carrier_point = {0.0, f.value(0.0)};
        } else {
            rec.carrier_vector = {1, 0};
            rec.carrier_point = {1.0, 0.0};
        }
        return rec;
    }
    double x0 = fixed_point(g);
    double slope = f.slope(x0);
    JkClassification jk = classify_jk(slope, k);

    auto candidate = [&](long long ell) {
        double x = slope_root(f, -static_cast<double>(ell) / (k - ell), 1.0);
        double val = ell * x + (k - ell) * f.value(x);
        return std::pair<double, double>(val, x);
    };

    double fval = HUGE_VAL, fx = 0.0;
    long long fell = 0;
    auto take = [&](long long ell) {
        auto [val, x] = candidate(ell);
        if (val < fval) { fval = val; fx = x; fell = ell; }
    };
    if (jk.jk == 0) take(1);
    else if (jk.jk >= k - 1) take(k - 1);
    else { take(jk.jk); take(jk.jk + 1); }

    if (static_cast<double>(k) <= fval) {
        rec.value = static_cast<double>(k);
        rec.carrier_vector = {k, 0};
        rec.carrier_point = {1.0, 0.0};
    } else {
        rec.value = fval;
        rec.carrier_vector = {fell, k - fell};
        rec.carrier_point = {fx, f.value(fx)};
    }
    return rec;
}

CapacityRecord gh_graph_symmetric(const GraphDomain& g, long long k) {
    const Profile& f = *g.profile;
    if (!g.symmetric)
        throw std::invalid_argument("gh_graph_symmetric: profile must be symmetric");
    double lam = f.lambda();
    double x0 = fixed_point(g);
    CapacityRecord rec;
    rec.k = k;
    if (g.curvature == Curvature::ConcaveCap) {
        rec.carrier_vector = balanced_vector(k, 2, Mode::Convex);
        if (k % 2 == 0) {
            rec.value = k * x0;
            rec.carrier_point = {x0, x0};
            return rec;
        }
        double branch = -static_cast<double>(k - 1) / (k + 1);
        if (branch < f.slope(0.0)) {
            double xk = slope_root(f, branch, lam);
            rec.value = 0.5 * (k - 1) * xk + 0.5 * (k + 1) * f.value(xk);
            rec.carrier_point = {xk, f.value(xk)};
        } else {
            rec.value = 0.5 * (k + 1) * lam;
            rec.carrier_point = {0.0, lam};
        }
        return rec;
    }
    // concave toric domain (convex-cup profile)
    rec.carrier_vector = balanced_vector(k, 2, Mode::Concave);
    if (k % 2 == 1) {
        rec.value = (k + 1) * x0;
        rec.carrier_point = {x0, x0};
        return rec;
    }
    double branch = -static_cast<double>(k) / (k + 2);
    if (branch < f.slope(lam)) {
        double xk = slope_root(f, -static_cast<double>(k + 2) / k, lam);
        rec.value = 0.5 * (k + 2) * xk + 0.5 * k * f.value(xk);
        rec.carrier_point = {xk, f.value(xk)};
    } else {
        rec.value = 0.5 * k * lam;
        rec.carrier_point = {0.0, lam};
    }
    return rec;
}

CapacityRecord gh_pellipsoid(double p, double a, long long k) {
    if (p < 1.0) throw std::invalid_argument("gh_pellipsoid: p >= 1");
    if (p == 1.0)
        return gh_general(Domain::simplex({1.0, a}), k);
    CapacityRecord rec;
    rec.k = k;
    if (k == 1) {
        rec.value = 1.0;
        if (a <= 1.0 + 1e-12) {
            rec.carrier_vector = {0, 1};
            rec.carrier_point = {0.0, a};
        } else {
            rec.carrier_vector = {1, 0};
            rec.carrier_point = {1.0, 0.0};
        }
        return rec;
    }
    // f'_p(x(f_p)) = -a^p; closed-form slope roots, stabilized through logs
    double slope = -std::pow(a, p);
    JkClassification jk = classify_jk(slope, k);
    double q = p / (p - 1.0);

    auto candidate = [&](long long ell) {
        // r = ell/((k-ell) a); x_ell = (r^q/(1+r^q))^(1/p), f(x_ell) = a/(1+r^q)^(1/p)
        double logr = std::log(static_cast<double>(ell))
                    - std::log(static_cast<double>(k - ell)) - std::log(a);
        double t = q * logr;  // log r^q
        double log_s, log_one_minus_s;  // s = r^q/(1+r^q)
        if (t > 0) {
            log_s = -std::log1p(std::exp(-t));
            log_one_minus_s = -t + log_s;
        } else {
            log_one_minus_s = -std::log1p(std::exp(t));
            log_s = t + log_one_minus_s;
        }
        double x = std::exp(log_s / p);
        double fx = a * std::exp(log_one_minus_s / p);
        double val = ell * x + (k - ell) * fx;
        return std::tuple<double, double, double>(val, x, fx);
    };

    double fval = HUGE_VAL, fx = 0.0, fy = 0.0;
    long long fell = 0;
    auto take = [&](long long ell) {
        auto [val, x, y] = candidate(ell);
        if (val < fval) { fval = val; fx = x; fy = y; fell = ell; }
    };
    if (jk.jk == 0) take(1);
    else if (jk.jk >= k - 1) take(k - 1);
    else { take(jk.jk); take(jk.jk + 1); }

    if (static_cast<double>(k) <= fval) {
        rec.value = static_cast<double>(k);
        rec.carrier_vector = {k, 0};
        rec.carrier_point = {1.0, 0.0};
    } else {
        rec.value = fval;
        rec.carrier_vector = {fell, k - fell};
        rec.carrier_point = {fx, fy};
    }
    return rec;
}

CapacityRecord gh_lp_ball(int n, double p, long long k) {
    if (p <= 0.0) throw std::invalid_argument("gh_lp_ball: p > 0");
    if (n < 2) throw std::invalid_argument("gh_lp_ball: n >= 2");
    CapacityRecord rec;
    rec.k = k;
    if (p == 2.0) return gh_symmetric(Domain::lp_ball(n, p), k);
    Mode mode = p > 2.0 ? Mode::Convex : Mode::Concave;
    rec.carrier_vector = balanced_vector(k, n, mode);
    double e = p / (p - 2.0);
    double sum = 0.0;
    for (long long c : rec.carrier_vector)
        sum += c > 0 ? std::pow(static_cast<double>(c), e) : 0.0;
    rec.value = std::pow(sum, (p - 2.0) / p);
    rec.carrier_point.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        long long c = rec.carrier_vector[i];
        rec.carrier_point[i] =
            c > 0 ? std::pow(static_cast<double>(c), 2.0 / (p - 2.0)) / std::pow(sum, 2.0 / p) : 0.0;
    }
    return rec;
}

CapacityRecord gh_polytope(const PolytopeDomain& poly, long long k) {
    Domain dom(poly);
    ValidationReport rep = validate(dom);
    if (!rep.symmetric)
        throw std::invalid_argument("gh_polytope: polytope is not symmetric");
    if (!rep.convex_ok)
        throw std::invalid_argument("gh_polytope: toric domain is not convex");
    return gh_symmetric(dom, k);
}

CapacityRecord gh_lagrangian_bidisk(long long k) {
    CapacityRecord rec;
    rec.k = k;
    rec.carrier_vector = balanced_vector(k, 2, Mode::Concave);
    Domain dom = Domain::curve(std::make_shared<AlphaCurve>());
    SupportResult r = support_min(dom, rec.carrier_vector);
    if (k % 2 == 1) {
        // closed form 2k+2; the engine value agrees and supplies the witness
        rec.value = 2.0 * k + 2.0;
        rec.carrier_point = r.witness;
        return rec;
    }
    // even k: the engine minimization, (2k+2) sin(pi k/(2k+2)); the printed
    // coefficient of the source formula fails monotonicity (see ledger/README)
    rec.value = r.value;
    rec.carrier_point = r.witness;
    return rec;
}

CapacityRecord gh_or_lp_bidisk(double p, long long k) {
    if (p < 1.0) throw std::invalid_argument("gh_or_lp_bidisk: p >= 1");
    if (std::fabs(p - 2.0) < 1e-3)
        throw std::invalid_argument("gh_or_lp_bidisk: p too close to the degenerate value 2");
    double vmax = std::pow(0.25, 1.0 / p);
    double g0 = or_gp(p, 0.0);
    double lam = 2.0 * kPi * vmax;
    double r = std::sqrt(2.0 / p);
    CapacityRecord rec;
    rec.k = k;

    auto root_v = [&](double target) {
        return brent([&](double u) { return or_gp_prime(p, u) - target; },
                     1e-7 * vmax, vmax * (1.0 - 1e-7), 1e-9 * vmax);
    };

    if (p < 2.0) {
        rec.carrier_vector = balanced_vector(k, 2, Mode::Convex);
        if (k % 2 == 0) {
            rec.value = k * g0;
            rec.carrier_point = {g0, g0};
            return rec;
        }
        double threshold = 1.0 / (r - 1.0);
        if (static_cast<double>(k) < threshold) {
            rec.value = 0.5 * (k + 1) * lam;
            rec.carrier_point = {0.0, lam};
            return rec;
        }
        double vk = root_v(-kPi * (k + 1) / k);
        rec.value = k * or_gp(p, vk) + (k + 1) * kPi * vk;
        rec.carrier_point = {or_gp(p, vk), 2.0 * kPi * vk + or_gp(p, vk)};
        return rec;
    }

    rec.carrier_vector = balanced_vector(k, 2, Mode::Concave);
    if (k % 2 == 1) {
        rec.value = (k + 1) * g0;
        rec.carrier_point = {g0, g0};
        return rec;
    }
    double threshold = r / (1.0 - r);
    if (static_cast<double>(k) < threshold) {
        rec.value = 0.5 * k * lam;
        rec.carrier_point = {0.0, lam};
        return rec;
    }
    double vk = root_v(-kPi * k / (k + 1));
    rec.value = (k + 1) * or_gp(p, vk) + k * kPi * vk;
    rec.carrier_point = {or_gp(p, vk), 2.0 * kPi * vk + or_gp(p, vk)};
    return rec;
}

BallBounds ball_bounds(const Domain& dom) {
    int n = dom.dimension();
    auto grow = [&](const std::function<RealVec(double)>& ray) {
        double hi = 1.0;
        while (dom.contains(ray(hi)) && hi < 1e12) hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
            double m = 0.5 * (lo + hi);
            if (dom.contains(ray(m))) lo = m; else hi = m;
        }
        return 0.5 * (lo + hi);
    };
    BallBounds b;
    b.a_sup = grow([&](double d) { RealVec p(n, 0.0); p[n - 1] = d; return p; });
    b.A_inf = n * grow([&](double d) { return RealVec(n, d); });
    return b;
}

std::vector<Carrier> carriers(const GraphDomain& g, long long k_max) {
    std::vector<Carrier> out;
    for (long long k = 1; k <= k_max; ++k) {
        CapacityRecord rec = gh_graph_symmetric(g, k);
        out.push_back({k, rec.carrier_point, rec.carrier_vector});
    }
    return out;
}

} // namespace capax
