#pragma once

#include <optional>
#include <vector>

#include "dbcalc/cover.hpp"
#include "dbcalc/homology.hpp"
#include "dbcalc/layers.hpp"

namespace dbcalc {

/// U(1) gauge p-field as a descent tuple over the star cover: form layers
/// A^(k) for k in [0, p] (Cech degree k, form degree p-k, entries supported in
/// closed stars) plus an integer simplicial (p+1)-cochain on top.  The tuple
/// is valid when every rung of the descent ladder holds exactly:
///   cech_delta(A^(k)) = layer_d(A^(k+1))   for k < p,
///   cech_delta(A^(p)) = vertexwise constants of the top cochain,
/// which forces the top cochain to be a cocycle.  p = -1 collapses to the top
/// cochain alone (an integer 0-cocycle).
struct GaugeField {
  int p = 0;
  std::vector<FormLayer> layers;  // layers[k]: Cech degree k, form degree p-k
  Cochain top;                    // degree p+1, integer entries

  static GaugeField zero(int p);
};

GaugeField operator+(const GaugeField& x, const GaugeField& y);
GaugeField operator-(const GaugeField& x, const GaugeField& y);
GaugeField operator*(const Rat& q, const GaugeField& x);
bool operator==(const GaugeField& x, const GaugeField& y);

/// Generator tuple of a gauge transformation: form layers G^(k) for k in
/// [0, p-1] (form degree p-1-k, closed-star supports) plus an integer
/// simplicial p-cochain g.  The induced field is
///   Delta^(0) = d G^(0),
///   Delta^(k) = d G^(k) + cech_delta G^(k-1)      (0 < k < p),
///   Delta^(p) = d_(-1) g + cech_delta G^(p-1),
///   top       = coboundary of g,
/// where d_(-1) g spreads g as vertexwise constants.  For p = 0 only g is
/// present.
struct GaugeTransformation {
  int p = 0;
  std::vector<FormLayer> gens;  // gens[k]: Cech degree k, form degree p-1-k
  Cochain g;                    // degree p, integer entries

  static GaugeTransformation zero(int p);
};

GaugeTransformation operator+(const GaugeTransformation& x,
                              const GaugeTransformation& y);

/// Rational p-cochain whose coboundary is integral; represents a flat field.
struct FlatClassRep {
  int p = 0;
  Cochain r;  // degree p

  FlatClassRep(int p_, Cochain r_) : p(p_), r(std::move(r_)) {}
};

/// True iff the field's shape is well formed, its top cochain is integral,
/// and every descent equation holds exactly.
bool check_descent(const StarCover& cover, const GaugeField& a);

/// The gauge field induced by a transformation tuple.  Always passes
/// check_descent; its curvature is zero and its top cochain is a coboundary.
GaugeField transformation_field(const StarCover& cover,
                                const GaugeTransformation& t);

/// Embeds a global p-cochain: layer 0 holds its closed-star restrictions,
/// everything else is zero.  Curvature is the coboundary of chi.
GaugeField field_from_form(const StarCover& cover, const Cochain& chi);

/// Flat field of a rational class representative: layer p holds the
/// vertexwise constants of r, the top cochain is its (integral) coboundary.
/// Throws PreconditionError when that coboundary is not integral.
GaugeField field_from_flat_class(const StarCover& cover,
                                 const FlatClassRep& rep);

/// Descends a closed (p+1)-cochain with integral periods into a gauge field
/// whose curvature is exactly f, coning each Cech level down the stars and
/// lifting the resulting top cochain to an integer one.  Throws
/// PreconditionError when f is not closed or a period is non-integral.
GaugeField field_from_curvature(const StarCover& cover, ComplexHomology& hom,
                                const Cochain& f, int p);

/// Global closed (p+1)-cochain glued from the star coboundaries of layer 0.
/// Requires check_descent; a glue mismatch throws std::logic_error (it cannot
/// happen on a valid descent tuple).
Cochain curvature(const StarCover& cover, const GaugeField& a);

/// Cohomology coordinates of the top cocycle in degree p+1.
QuotientPresentation::Coords class_of(ComplexHomology& hom,
                                      const GaugeField& a);

/// Splits a closed rational cochain with integral periods as
///   x = u + coboundary(beta)
/// with u an integer combination of the free cohomology generators and beta
/// rational.  Empty when x is not closed or some period is non-integral.
struct CocycleSplit {
  Cochain u;
  Cochain beta;
};
std::optional<CocycleSplit> integral_cocycle_split(ComplexHomology& hom,
                                                   const Cochain& x);

/// Outcome of the equivalence decision.  When the fields are equivalent and
/// p >= 0 the witness generates their difference exactly:
///   transformation_field(witness) == b - a.
struct EquivalenceResult {
  bool equivalent = false;
  std::optional<GaugeTransformation> witness;
};

/// Decides whether two fields of the same degree differ by a gauge
/// transformation, comparing curvature, the class of the top cocycle, and
/// holonomies over a generating set of p-cycles; completeness of that triple
/// is a tested property of the shipped manifolds.  On success the witness is
/// reconstructed by peeling the difference tuple down the Cech ladder.
/// Degree -1 fields admit no transformations, so equivalence is equality and
/// the witness stays empty.
EquivalenceResult gauge_equivalent(const StarCover& cover, ComplexHomology& hom,
                                   const GaugeField& a, const GaugeField& b);

}  // namespace dbcalc
