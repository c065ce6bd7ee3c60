#pragma once

#include <string>
#include <vector>

#include "capax/bumps.hpp"
#include "capax/domains.hpp"
#include "capax/ghcap.hpp"

namespace capax {

// Symmetric extension of base + amplitude * bump (bump supported left of the
// fixed point); validates class membership of the result.
GraphDomain symmetric_extend(const GraphDomain& base, const PerturbationSpec& spec);

// Capacity-blind volume change: bump of integral 1/2 between consecutive odd
// carriers x_j, x_{j+2}; every c_k fixed, area moves by exactly delta.
GraphDomain family_novolume(const GraphDomain& f, long long j, double delta);

// Single-capacity variation: plateau 2/j (even, concave) or 2/(j+1) (odd,
// convex) over the j-th carrier with zero integral; only c_j moves, by delta.
GraphDomain family_mutual(const GraphDomain& base, long long j, double delta);

// The recognition counterexample pair: the eps-shifted bidisk image h and its
// rho-perturbation near the depth-2 tangency; equal capacities and volume,
// ECH_9 moved by delta.
struct BlindPair {
    GraphDomain before;
    GraphDomain after;
    PerturbationSpec rho;
};
BlindPair family_blind(double eps, double delta);

// ECH_9 before/after the delta-shift (after - before must equal delta).
struct Ech9Shift { double before; double after; };
Ech9Shift ech9_shift(const GraphDomain& h, const PerturbationSpec& rho, double delta);

// Piecewise-linear isocapacity envelopes of a symmetric convex graph domain
// and the resulting volume-ratio lower bound.
struct IvrGraphBounds {
    GraphDomain lower;      // inscribed polyline through the odd carriers
    GraphDomain upper;      // circumscribed polyline through tangent intersections
    double ratio;           // area(upper)/area(lower)
    double error_bar;       // truncation strips of both series
};
IvrGraphBounds ivr_graph_bounds(const GraphDomain& f);

// Toric-polytope bound 3(2-r) - 2/r on r in [2/3, 1), produced only after the
// isocapacity check between Omega_r and the extremal six-vertex polytope.
double ivr_polytope_bound(double r, long long k_max = 20);

// Recomputation-based verification of a family claim.
struct FamilyCheck {
    bool pass = true;
    double max_capacity_residual = 0.0;  // max_k |c_k(pert) - c_k(base) - shift_k|
    double area_residual = 0.0;          // |area(pert) - area(base) - shift|
    std::vector<double> base_caps, pert_caps;
    std::string detail;
};
FamilyCheck verify_family(const GraphDomain& base, const GraphDomain& pert,
                          long long k_max, long long shifted_k, double cap_shift,
                          double area_shift, double tol);

} // namespace capax
