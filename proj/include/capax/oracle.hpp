#pragma once

#include "capax/domains.hpp"

namespace capax {

struct GridSpec {
    int resolution = 64;    // cells per axis on the first pass
    int refine_depth = 40;  // nested refinements; stops at 1e-10 cell size
};

// Literal composition enumeration with grid-refined support optimization.
// Wholly independent of the engines it validates (no symmetry collapse,
// no slope equations).
double brute_gh(const Domain& dom, long long k, const GridSpec& grid = {});

// Grid-refined support extremum over the positive boundary (n <= 3).
double brute_support(const Domain& dom, const RealVec& v, bool want_max,
                     const GridSpec& grid = {});

// k-th element of Sort[{N union aN}] (the ellipsoid capacity sequence).
double sorted_multiset_ellipsoid(double a, long long k);

// k-th element (c_0 = 0) of the sorted multiset {a + b m : a,b >= 0}:
// the ECH sequence of E(1,m).
long long lattice_ech_ellipsoid(long long m, long long k);

// Midpoint-grid + Monte Carlo area with a crude certified error; the two
// estimates must agree with each other and with area().
struct BruteArea { double grid_value; double mc_value; double error; };
BruteArea brute_area(const Domain& dom, int resolution = 2000);

} // namespace capax
