#pragma once

#include <string>
#include <vector>

#include "capax/domains.hpp"
#include "capax/support.hpp"

namespace capax {

struct CapacityRecord {
    long long k = 0;
    double value = 0.0;
    IntVec carrier_vector;   // optimizing composition
    RealVec carrier_point;   // boundary point realizing the value
};

enum class Mode { Convex, Concave };

// V(k,n) (convex, nondecreasing) or Vcheck(k,n) (concave, nonincreasing):
// the near-equal composition at which the symmetric formulas collapse.
IntVec balanced_vector(long long k, int n, Mode mode);

// One step of the transfer map T (convex: v ascending, moves a unit from the
// top to the bottom when v_n > v_1 + 1) or the backwards transfer B.
IntVec transfer(const IntVec& v, Mode mode);

// Interval index J_k with f'(x(f)) in I^k_j, half-open intervals as printed:
// I^k_j = (-(j+1)/(k-j-1), -j/(k-j)] for j <= k-2, I^k_{k-1} = (-inf, -k+1].
struct JkClassification {
    long long k;
    long long jk;
    double slope_at_fixed_point;
};
JkClassification classify_jk(double slope, long long k);

// General composition formulas (both clauses of the capacity theorem).
CapacityRecord gh_general(const Domain& dom, long long k);

// Symmetric collapse: a single support call at the balanced vector.
CapacityRecord gh_symmetric(const Domain& dom, long long k);

// Convex graph domains in class V (f(0) >= 1, f(1) = 0, f'(0) = 0,
// f' -> -inf, f'' < 0): c_k = min{k, F(k,f)} with one or two slope roots.
CapacityRecord gh_graph_convex(const GraphDomain& g, long long k);

// Symmetric graph domains (both curvatures): closed forms through the fixed
// point and the slope-equation carriers.
CapacityRecord gh_graph_symmetric(const GraphDomain& g, long long k);

// E_p(1,a): the class-V formula with closed-form slope roots, no root-finding.
CapacityRecord gh_pellipsoid(double p, double a, long long k);

// B^n_p via the collapsed lp-mean formulas.
CapacityRecord gh_lp_ball(int n, double p, long long k);

// Symmetric convex toric polytope: vertex maximum at the balanced vector.
CapacityRecord gh_polytope(const PolytopeDomain& poly, long long k);

// Lagrangian bidisk: odd k -> 2k+2; even k -> engine minimization over the
// alpha curve, which evaluates to (2k+2) sin(pi k/(2k+2)).
CapacityRecord gh_lagrangian_bidisk(long long k);

// lp-sum of two Lagrangian disks (p != 2), via g_p quadrature and the
// case formulas of the symmetric graph propositions.
CapacityRecord gh_or_lp_bidisk(double p, long long k);

// Largest axis intercept (optimal ball into X) and n times the superdiagonal
// parameter (optimal ball around X), both by membership bisection.
struct BallBounds { double a_sup; double A_inf; };
BallBounds ball_bounds(const Domain& dom);

// Capacity carriers of a symmetric graph domain: boundary point plus the
// torus homology label (the balanced vector).
struct Carrier {
    long long k;
    RealVec point;
    IntVec torus_class;
};
std::vector<Carrier> carriers(const GraphDomain& g, long long k_max);

} // namespace capax
