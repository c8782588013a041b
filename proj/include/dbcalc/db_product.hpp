#pragma once

#include "dbcalc/currents.hpp"
#include "dbcalc/cycles.hpp"
#include "dbcalc/gauge_field.hpp"
#include "dbcalc/partition.hpp"

namespace dbcalc {

/// Canonical form of a gauge (-1)-current: every layer below the top one is
/// gauged away, leaving a single rational n-cochain r.  The reconstruction
/// places dimension_sign(n) * r_sigma times the oriented star chain at each
/// top carrier sigma; on an n-complex the coboundary of r lands in degree
/// n+1 and so vanishes identically.
struct TopCurrentCanonical {
  Cochain r;  // degree n, rational
};

/// The gauge (-1)-current of a canonical form.
GaugeCurrent top_current(const StarCover& cover, const TopCurrentCanonical& t);

/// DB product of a gauge q-field and a gauge p-field, a gauge (p+q+1)-field.
/// Layer k of the product couples, per Cech carrier s,
///   B_(k) cup (the star coboundary of A's layer 0 at the back vertex of s)
/// for k <= q, and for k > q the top cocycle of B on the front face times
/// A's layer k-q-1 on the back face, with the sign (-1)^((q+1)(k-q-1)); the
/// top cocycle is (-1)^((q+1)(p+1)) times the cup of the two tops.  Output
/// degree p+q+1 must not exceed n; the result always passes check_descent
/// and transformations of either factor move it by a transformation.
GaugeField db_product(const StarCover& cover, const GaugeField& b,
                      const GaugeField& a);

/// (-1)^((p+1)(n-p)), the symmetry weight of the product in complementary
/// degrees; requires 0 <= p <= n-1.
int epsilon_sign(int p, int n);

/// k times the integral of db_product(b, a) along a decomposition of the
/// fundamental cycle, in R/Z.  The coupling k must be an integer: for
/// non-integer k the mod-1 value would depend on the gauge representatives,
/// so a PreconditionError is thrown instead.  Degrees must be complementary,
/// q = n - p - 1.
RmodZ bf_action(const StarCover& cover, ComplexHomology& hom,
                const GaugeField& b, const GaugeField& a, const Rat& k);

/// DB cap of a gauge p-field with the unit decomposition: the dual gauge
/// p-field adjoint to the DB product, so that for every gauge current B of
/// label p,
///   eval_on_unit(extended_db_product(B, A), mu)
///     == eval_current_on_dualfield(B, db_cap(A, mu))
/// holds exactly.  Layer k cups the curvature of A into the k-th partition
/// layer; the last layer carries an extra hat_partial correction assembled
/// from the higher partition layers, and the bottom is the top cocycle of A
/// capped into the partition's top cycle.
DualGaugeField db_cap(const StarCover& cover, const GaugeField& a,
                      const PartitionLayers& mu);

/// Extended DB product of a gauge p-current and a gauge p-field: the gauge
/// (-1)-current with layer k capping A's curvature into B's layer k while
/// k <= n-p-1, and B's top cocycle times A's layers capped into the oriented
/// top chain above that.  Bilinear over Z; degree mismatch throws.
GaugeCurrent extended_db_product(const StarCover& cover, const GaugeCurrent& b,
                                 const GaugeField& a);

/// Gauges away every layer of a (-1)-current below the top one by per-star
/// boundary solves, leaving a canonical form with the same evaluations.  The
/// transformations used carry g = 0, so the evaluation on the unit dual
/// field is preserved as a raw rational, not only mod 1.
TopCurrentCanonical reduce_top_current(const StarCover& cover,
                                       const GaugeCurrent& c);

/// Evaluation of a gauge (-1)-current on the unit dual field: the
/// alternating sum of its layers paired against the partition layers.  The
/// reduced path through reduce_top_current gives (-1)^n <r, m> and agrees
/// with this sum.
QuantumIntegral eval_on_unit(const StarCover& cover, const GaugeCurrent& c,
                             const PartitionLayers& mu);

}  // namespace dbcalc
