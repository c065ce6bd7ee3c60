#include "capax/echcap.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "capax/roots.hpp"

namespace capax {

namespace {

class SmoothArc final : public BoundaryArc {
public:
    explicit SmoothArc(CurvePtr c) : c_(std::move(c)) {}
    double t_lo() const override { return c_->t_lo(); }
    double t_hi() const override { return c_->t_hi(); }
    Vec2 point(double t) const override { return c_->point(t); }
    MinResult minimize(const RealVec& u, double wlo, double whi) const override {
        auto val = [&](double t) {
            Vec2 p = c_->point(t);
            return u[0] * p[0] + u[1] * p[1];
        };
        auto deriv = [&](double t) {
            Vec2 d = c_->tangent(t);
            double s = u[0] * d[0] + u[1] * d[1];
            return std::isfinite(s) ? s : (s > 0 ? 1e300 : -1e300);
        };
        double span = c_->t_hi() - c_->t_lo();
        double eps = 1e-12 * span;
        if (whi - wlo <= 2 * eps) {
            double t = 0.5 * (wlo + whi);
            return {val(t), t, t};
        }
        double dlo = deriv(wlo + eps), dhi = deriv(whi - eps);
        double ts;
        if (dlo >= 0) ts = wlo;           // functional increasing: min at left
        else if (dhi <= 0) ts = whi;      // decreasing throughout: min at right
        else ts = bisect(deriv, wlo + eps, whi - eps, 1e-14 * span);
        return {val(ts), ts, ts};
    }
private:
    CurvePtr c_;
};

class PolylineArc final : public BoundaryArc {
public:
    explicit PolylineArc(std::vector<Vec2> pts) : pts_(std::move(pts)) {}
    double t_lo() const override { return 0.0; }
    double t_hi() const override { return static_cast<double>(pts_.size() - 1); }
    Vec2 point(double t) const override {
        auto i = static_cast<std::size_t>(std::clamp(
            std::floor(t), 0.0, static_cast<double>(pts_.size() - 2)));
        double w = t - static_cast<double>(i);
        return {pts_[i][0] + w * (pts_[i + 1][0] - pts_[i][0]),
                pts_[i][1] + w * (pts_[i + 1][1] - pts_[i][1])};
    }
    MinResult minimize(const RealVec& u, double wlo, double whi) const override {
        auto val = [&](double t) {
            Vec2 p = point(t);
            return u[0] * p[0] + u[1] * p[1];
        };
        // linear on each segment: candidates are window ends and interior vertices
        std::vector<double> ts{wlo};
        for (std::size_t i = 1; i + 1 < pts_.size() + 1; ++i) {
            double t = static_cast<double>(i);
            if (t > wlo && t < whi) ts.push_back(t);
        }
        ts.push_back(whi);
        double best = HUGE_VAL;
        for (double t : ts) best = std::min(best, val(t));
        double scale = std::fabs(best) + 1.0;
        double lo = whi, hi = wlo;
        for (double t : ts)
            if (val(t) <= best + 1e-12 * scale) { lo = std::min(lo, t); hi = std::max(hi, t); }
        return {best, lo, hi};
    }
private:
    std::vector<Vec2> pts_;
};

} // namespace

std::shared_ptr<const BoundaryArc> boundary_arc(const Domain& dom) {
    if (dom.dimension() != 2 || !dom.is_concave())
        throw std::invalid_argument("boundary_arc: concave 2-D domains only");
    if (const auto* c = dom.get_if<CurveDomain>())
        return std::make_shared<SmoothArc>(c->curve);
    if (const auto* s = dom.get_if<SimplexDomain>()) {
        return std::make_shared<PolylineArc>(
            std::vector<Vec2>{{0.0, s->scales[1]}, {s->scales[0], 0.0}});
    }
    if (const auto* g = dom.get_if<GraphDomain>()) {
        if (auto* poly = dynamic_cast<const PolylineProfile*>(g->profile.get())) {
            std::vector<Vec2> pts;
            for (const auto& p : poly->points()) pts.push_back({p.first, p.second});
            return std::make_shared<PolylineArc>(std::move(pts));
        }
        if (auto* cg = dynamic_cast<const CurveGraphProfile*>(g->profile.get()))
            return std::make_shared<SmoothArc>(cg->curve());
        return std::make_shared<SmoothArc>(std::make_shared<ProfileCurve>(g->profile));
    }
    throw std::invalid_argument("boundary_arc: unsupported domain kind");
}

void compute_tau(WeightNode& node, const BoundaryArc& arc) {
    if (node.window_hi - node.window_lo <= 0) {
        node.tau = 0.0;
        node.attain_lo = node.attain_hi = node.window_lo;
        return;
    }
    auto u = node.functional();
    RealVec uv{static_cast<double>(u[0]), static_cast<double>(u[1])};
    auto mr = arc.minimize(uv, node.window_lo, node.window_hi);
    node.tau = mr.value - node.offset();
    node.attain_lo = mr.lo;
    node.attain_hi = mr.hi;
}

SubdivideResult subdivide(const WeightNode& node) {
    SubdivideResult out;
    const double span = node.window_hi - node.window_lo;
    const double tol = 1e-12 * (1.0 + span);
    auto shear = [&](bool second_child) {
        WeightNode child;
        child.label = node.label + (second_child ? "2" : "1");
        // child = S . (translate by (-tau,0) or (0,-tau)) . parent
        const auto& M = node.map;
        std::array<double, 2> tr = node.shift;
        if (second_child) {
            tr[1] -= node.tau;
            child.map = {{{M[0][0], M[0][1]},
                          {M[0][0] + M[1][0], M[0][1] + M[1][1]}}};
            child.shift = {tr[0], tr[0] + tr[1]};
        } else {
            tr[0] -= node.tau;
            child.map = {{{M[0][0] + M[1][0], M[0][1] + M[1][1]},
                          {M[1][0], M[1][1]}}};
            child.shift = {tr[0] + tr[1], tr[1]};
        }
        return child;
    };
    if (node.attain_lo - node.window_lo > tol) {
        out.child2 = shear(true);
        out.child2.window_lo = node.window_lo;
        out.child2.window_hi = node.attain_lo;
        out.has2 = true;
    }
    if (node.window_hi - node.attain_hi > tol) {
        out.child1 = shear(false);
        out.child1.window_lo = node.attain_hi;
        out.child1.window_hi = node.window_hi;
        out.has1 = true;
    }
    return out;
}

namespace {

void expand_exhaustive(const BoundaryArc& arc, const WeightNode& root, int depth,
                       std::vector<std::pair<double, std::string>>& weights) {
    if (depth > 64) return;
    WeightNode n = root;
    compute_tau(n, arc);
    if (n.tau <= 1e-13) return;
    weights.emplace_back(n.tau, n.label);
    auto ch = subdivide(n);
    if (ch.has2) expand_exhaustive(arc, ch.child2, depth + 1, weights);
    if (ch.has1) expand_exhaustive(arc, ch.child1, depth + 1, weights);
}

} // namespace

WeightExpansion weight_expansion(const Domain& dom, long long m) {
    if (m < 1) throw std::invalid_argument("weight_expansion: m >= 1");
    auto arc = boundary_arc(dom);

    WeightNode root;
    root.window_lo = arc->t_lo();
    root.window_hi = arc->t_hi();
    compute_tau(root, *arc);

    auto cmp = [](const WeightNode& a, const WeightNode& b) { return a.tau < b.tau; };
    std::priority_queue<WeightNode, std::vector<WeightNode>, decltype(cmp)> frontier(cmp);
    frontier.push(root);

    WeightExpansion out;
    bool monotone_ok = true;
    while (!frontier.empty()) {
        WeightNode n = frontier.top();
        frontier.pop();
        if (n.tau <= 1e-13) break;
        if (static_cast<long long>(out.weights.size()) >= m
            && n.tau <= out.weights.back().first + 1e-15)
            break;  // completeness certificate: frontier below the m-th weight
        out.weights.emplace_back(n.tau, n.label);
        if (n.label.size() >= 64) continue;  // hard depth cap
        auto ch = subdivide(n);
        for (WeightNode* c : {ch.has1 ? &ch.child1 : nullptr, ch.has2 ? &ch.child2 : nullptr}) {
            if (!c) continue;
            compute_tau(*c, *arc);
            if (c->tau > n.tau + 1e-9 * (1.0 + n.tau)) monotone_ok = false;
            if (c->tau > 1e-13) frontier.push(*c);
        }
        if (!monotone_ok) break;
    }

    if (!monotone_ok) {
        // the best-first order relied on child tau <= parent tau; fall back to
        // exhaustive expansion to a fixed depth
        out.weights.clear();
        WeightNode fresh;
        fresh.window_lo = arc->t_lo();
        fresh.window_hi = arc->t_hi();
        expand_exhaustive(*arc, fresh, 0, out.weights);
    }

    std::sort(out.weights.begin(), out.weights.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    out.complete_to = std::min<long long>(m, static_cast<long long>(out.weights.size()));
    return out;
}

std::vector<TauTableEntry> symmetric_tau_table(const Domain& dom) {
    const auto* g = dom.get_if<GraphDomain>();
    CurvePtr curve;
    if (g) {
        if (auto* cg = dynamic_cast<const CurveGraphProfile*>(g->profile.get()))
            curve = cg->curve();
        else
            curve = std::make_shared<ProfileCurve>(g->profile);
    } else if (const auto* c = dom.get_if<CurveDomain>()) {
        curve = c->curve;
    } else {
        throw std::invalid_argument("symmetric_tau_table: graph or curve domain required");
    }
    auto slope_at = [&](double t) {
        Vec2 d = curve->tangent(t);
        return d[1] / d[0];
    };
    double lo = curve->t_lo(), hi = curve->t_hi();
    double span = hi - lo;
    if (slope_at(lo + 1e-9 * span) > -4.0)
        throw std::invalid_argument("symmetric_tau_table: need h'(0) < -4");

    auto point_at_slope = [&](double s) {
        double t = bisect([&](double t) { return slope_at(t) - s; },
                          lo + 1e-12 * span, hi - 1e-12 * span, 1e-14 * span);
        return curve->point(t);
    };

    // label, functional (a,b), tau-offset combination over previous rows
    struct Row {
        const char* label;
        double slope;
        double a, b;
        std::vector<std::pair<int, double>> offs;  // (row index, coefficient)
    };
    const std::vector<Row> rows = {
        {"",    -1.0,        1, 1, {}},
        {"2",   -2.0,        2, 1, {{0, 1}}},
        {"22",  -3.0,        3, 1, {{0, 1}, {1, 1}}},
        {"21",  -1.5,        3, 2, {{0, 2}, {1, 1}}},
        {"222", -4.0,        4, 1, {{0, 1}, {1, 1}, {2, 1}}},
        {"221", -2.5,        5, 2, {{0, 2}, {1, 2}, {2, 1}}},
        {"212", -5.0 / 3.0,  5, 3, {{0, 3}, {1, 2}, {3, 1}}},
        {"211", -4.0 / 3.0,  4, 3, {{0, 3}, {1, 1}, {3, 1}}},
    };
    std::vector<TauTableEntry> out;
    std::vector<double> tau;
    for (const auto& row : rows) {
        Vec2 p = point_at_slope(row.slope);
        double v = row.a * p[0] + row.b * p[1];
        for (auto [idx, coef] : row.offs) v -= coef * tau[idx];
        tau.push_back(v);
        out.push_back({row.label, v});
    }
    return out;
}

namespace {

double best_d_recursive(const std::vector<double>& w, std::size_t i, long long budget,
                        long long dmax, std::vector<long long>& d,
                        std::vector<long long>& best_d, double acc, double& best) {
    if (acc > best) {
        best = acc;
        best_d.assign(d.begin(), d.begin() + i);
    }
    if (i >= w.size() || budget <= 0) return best;
    for (long long di = std::min(dmax, static_cast<long long>(
             std::floor(0.5 * (std::sqrt(8.0 * budget + 1.0) - 1.0)))); di >= 1; --di) {
        long long cost = di * (di + 1) / 2;
        if (cost > budget) continue;
        d[i] = di;
        best_d_recursive(w, i + 1, budget - cost, di, d, best_d, acc + di * w[i], best);
    }
    d[i] = 0;
    return best;
}

} // namespace

EchResult ech_capacity(const Domain& dom, long long k) {
    if (k < 1) throw std::invalid_argument("ech_capacity: k >= 1");
    // at most k weights can carry d_i >= 1 (each costs at least 1)
    WeightExpansion exp = weight_expansion(dom, k);
    std::vector<double> w;
    for (const auto& [tau, label] : exp.weights) {
        w.push_back(tau);
        if (static_cast<long long>(w.size()) >= k) break;
    }
    if (w.empty()) throw std::invalid_argument("ech_capacity: empty weight expansion");
    std::vector<long long> d(w.size(), 0), best_d;
    double best = 0.0;
    best_d_recursive(w, 0, k, k, d, best_d, 0.0, best);
    return {best, best_d};
}

} // namespace capax
