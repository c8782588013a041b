#pragma once

#include "dbcalc/cycles.hpp"
#include "dbcalc/rng.hpp"

namespace dbcalc {

/// Sparse rational cochain with up to `terms` nonzero entries on random
/// d-simplices.  Deterministic in the stream.
Cochain random_rational_cochain(const SimplicialComplex& k, int d, Rng& rng,
                                int terms = 4);

/// Sparse integer chain on random d-simplices.
Chain random_integer_chain(const SimplicialComplex& k, int d, Rng& rng,
                           int terms = 4);

/// Sparse integer cochain on random d-simplices.
Cochain random_integer_cochain(const SimplicialComplex& k, int d, Rng& rng,
                               int terms = 4);

/// Integer d-cycle: a small combination of homology generators plus a random
/// boundary.  Degree n cycles are multiples of the fundamental cycle.
Chain random_integer_cycle(ComplexHomology& hom, int d, Rng& rng);

/// Arbitrary generator tuple: random closed-star layers plus a random integer
/// p-cochain.  Any such tuple is a valid transformation.
GaugeTransformation random_gauge_transformation(const StarCover& cover, int p,
                                                Rng& rng);

/// Gauge p-field mixing every constructor: a global form, a lifted integer
/// curvature class, a flat class with free and torsion holonomy, and a random
/// transformation.  Spans the field group on the shipped manifolds.
GaugeField random_gauge_field(const StarCover& cover, ComplexHomology& hom,
                              int p, Rng& rng);

}  // namespace dbcalc
