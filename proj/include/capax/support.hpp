#pragma once

#include "capax/domains.hpp"

namespace capax {

struct SupportResult {
    double value;
    RealVec witness;  // point of the positive boundary achieving the value
};

// max{ <v,w> : w in closure of the positive part of the boundary of Omega }.
// v: nonnegative integers, not all zero, matching dimension.
SupportResult support_max(const Domain& dom, const IntVec& v);

// min{ <v,w> : w in closure of the positive part of the boundary of Omega };
// the domain must be concave and v must have all components >= 1.
SupportResult support_min(const Domain& dom, const IntVec& v);

// Real-weighted variants (used internally and by the brute oracle).
SupportResult support_max(const Domain& dom, const RealVec& v);
SupportResult support_min(const Domain& dom, const RealVec& v);

} // namespace capax
