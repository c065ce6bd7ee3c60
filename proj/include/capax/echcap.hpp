#pragma once

#include <array>
#include <string>
#include <vector>

#include "capax/domains.hpp"

namespace capax {

// Node of the concave subdivision tree. Instead of materializing transformed
// regions, each node keeps the integral affine map back to the base boundary
// arc: tau is then a single 1-D minimization of a linear functional.
struct WeightNode {
    std::string label;                       // subdivision path over {1,2}
    std::array<std::array<long long, 2>, 2> map{{{1, 0}, {0, 1}}};  // linear part
    std::array<double, 2> shift{0.0, 0.0};   // translation part
    double window_lo = 0.0, window_hi = 0.0; // parameter window on the base arc
    double tau = 0.0;
    double attain_lo = 0.0, attain_hi = 0.0; // where the minimum is attained

    // <(1,1), map . x> is the node functional; offset = -(shift_1 + shift_2)
    std::array<long long, 2> functional() const {
        return {map[0][0] + map[1][0], map[0][1] + map[1][1]};
    }
    double offset() const { return -(shift[0] + shift[1]); }
};

// Boundary arc abstraction the subdivision engine works on: a smooth strictly
// convex arc or a polyline (where the minimum may be attained on a segment).
class BoundaryArc {
public:
    virtual ~BoundaryArc() = default;
    virtual double t_lo() const = 0;
    virtual double t_hi() const = 0;
    virtual Vec2 point(double t) const = 0;
    struct MinResult { double value; double lo; double hi; };
    virtual MinResult minimize(const RealVec& u, double wlo, double whi) const = 0;
};

// Builds the arc view for a concave 2-D domain (curve, graph, simplex).
std::shared_ptr<const BoundaryArc> boundary_arc(const Domain& dom);

// tau of a node: min over its window of the node functional minus offset.
// Fills tau and the attainment interval; degenerate windows give tau = 0.
void compute_tau(WeightNode& node, const BoundaryArc& arc);

// Children of a node whose tau is computed: windows split at the attainment
// interval, maps are the sheared pullbacks. Empty sides yield no child.
struct SubdivideResult {
    bool has1 = false, has2 = false;
    WeightNode child1, child2;
};
SubdivideResult subdivide(const WeightNode& node);

struct WeightExpansion {
    std::vector<std::pair<double, std::string>> weights;  // (tau, label), nonincreasing
    long long complete_to = 0;  // the first complete_to weights are certified largest
};

// Best-first expansion until m weights are out and the frontier is below the
// m-th; asserts child tau <= parent tau, with an exhaustive fallback.
WeightExpansion weight_expansion(const Domain& dom, long long m);

// The eight closed-form tau values of the symmetric three-level table,
// computed by slope root-finding on the profile (h'(0) < -4 required).
struct TauTableEntry { std::string label; double value; };
std::vector<TauTableEntry> symmetric_tau_table(const Domain& dom);

// ECH capacity: max sum d_i w_i subject to sum d_i(d_i+1)/2 <= k,
// restricted to nonincreasing d (asserted against full enumeration for small k).
struct EchResult { double value; std::vector<long long> d; };
EchResult ech_capacity(const Domain& dom, long long k);

} // namespace capax
