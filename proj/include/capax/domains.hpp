#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "capax/curves.hpp"
#include "capax/profiles.hpp"

namespace capax {

using RealVec = std::vector<double>;
using IntVec = std::vector<long long>;

enum class Curvature { ConcaveCap, ConvexCup };

// Moment image of an ellipsoid E(a_1,...,a_n): { x >= 0, sum x_i/a_i <= 1 }.
struct SimplexDomain { RealVec scales; };

// Moment image of a polydisk P(a_1,...,a_n): [0,a_1] x ... x [0,a_n].
struct BoxDomain { RealVec scales; };

// Moment image of the symplectic lp-sum B^n_p: { sum x_i^(p/2) <= 1 }.
struct LpBallDomain { int n; double p; };

// Convex hull of the given vertices in the nonnegative orthant.
struct PolytopeDomain { std::vector<RealVec> vertices; };

// Region under the graph of a catalog profile.
struct GraphDomain {
    ProfilePtr profile;
    Curvature curvature;
    bool symmetric = false;
};

// Region under a parametric concave boundary curve.
struct CurveDomain { CurvePtr curve; };

class Domain {
public:
    using Variant = std::variant<SimplexDomain, BoxDomain, LpBallDomain,
                                 PolytopeDomain, GraphDomain, CurveDomain>;

    Domain(SimplexDomain d) : v_(std::move(d)) {}
    Domain(BoxDomain d) : v_(std::move(d)) {}
    Domain(LpBallDomain d) : v_(std::move(d)) {}
    Domain(PolytopeDomain d) : v_(std::move(d)) {}
    Domain(GraphDomain d) : v_(std::move(d)) {}
    Domain(CurveDomain d) : v_(std::move(d)) {}

    static Domain simplex(RealVec scales) { return Domain(SimplexDomain{std::move(scales)}); }
    static Domain box(RealVec scales) { return Domain(BoxDomain{std::move(scales)}); }
    static Domain lp_ball(int n, double p) { return Domain(LpBallDomain{n, p}); }
    static Domain polytope(std::vector<RealVec> verts) { return Domain(PolytopeDomain{std::move(verts)}); }
    static Domain graph(ProfilePtr prof, Curvature c, bool symmetric) {
        return Domain(GraphDomain{std::move(prof), c, symmetric});
    }
    static Domain curve(CurvePtr c) { return Domain(CurveDomain{std::move(c)}); }

    template <class T> const T* get_if() const { return std::get_if<T>(&v_); }
    const Variant& variant() const { return v_; }

    int dimension() const;
    bool is_convex() const;    // X_Omega is a convex toric domain
    bool is_concave() const;   // X_Omega is a concave toric domain
    bool is_symmetric() const; // Omega invariant under coordinate permutations
    bool contains(const RealVec& pt, double tol = 1e-12) const;
    std::string kind() const;

private:
    Variant v_;
};

// Lebesgue measure of Omega ("volume" of X_Omega under this project's
// bookkeeping: adding delta to the area adds delta to the volume).
double area(const Domain& dom);

// Unique fixed point of a strictly decreasing profile, |f(x)-x| <= 1e-12.
double fixed_point(const GraphDomain& g);

struct ValidationReport {
    bool curvature_ok = false;       // sampled second differences match the flag
    bool symmetric = false;          // f(f(x)) ~ x resp. vertex permutation closure
    bool convex_ok = false;          // for polytopes: hat(Omega) is convex
    bool smooth_boundary = false;    // literal criterion: slope finite, away from 0
    bool symmetric_closure_smooth = false; // heuristic for symmetric profiles
    std::string detail;
};

ValidationReport validate(const Domain& dom);

// Convex-position ordering of 2-D polytope vertices (counterclockwise hull).
std::vector<RealVec> hull2d(const std::vector<RealVec>& pts);

} // namespace capax
