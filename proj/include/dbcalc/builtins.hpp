#pragma once

#include <string>

#include "dbcalc/complex.hpp"

namespace dbcalc {

/// Cyclic polygon with k >= 3 vertices.
SimplicialComplex circle(int k);

/// Boundary of the (n+1)-simplex, n >= 1.
SimplicialComplex sphere(int n);

/// Minimal 7-vertex triangulated 2-torus.
SimplicialComplex torus2();

/// 3-torus: staircase-triangulated periodic 3x3x3 grid, 27 vertices.
SimplicialComplex torus3();

/// Lens space L(k,1), k >= 2: barycentric subdivision of the join of two
/// 2k-gons (a 3-sphere), divided by the free rotation of order k that shifts
/// both polygons by two steps.
SimplicialComplex lens(int k);

/// Barycentric subdivision; vertex i of the result is cell i of the input's
/// global simplex enumeration.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

/// Parses "circle:5", "sphere:2", "torus2", "torus3", "lens:4".
SimplicialComplex builtin_complex(const std::string& spec);

}  // namespace dbcalc
