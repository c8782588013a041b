#pragma once

#include <vector>

#include "dbcalc/cycles.hpp"
#include "dbcalc/gauge_field.hpp"
#include "dbcalc/partition.hpp"

namespace dbcalc {

/// U(1) gauge q-current: the chain-valued descent tuple evaluated against
/// dual gauge fields.  With P = n-q-1, the layers A_(k) for k in [0, P] carry
/// one rational chain of dimension q+1+k per Cech k-carrier, every entry
/// supported on the open star of its carrier, and the tuple is closed off by
/// an integer simplicial (P+1)-cocycle.  Validity means every rung holds
/// exactly:
///   hat_delta A_(k-1) = - layer_boundary A_(k)        (0 < k <= P),
///   hat_delta A_(P)   = degree_minus_one_dual(top),
/// the boundary operator projected back onto the open stars throughout.
/// q = -1 is allowed (P = n); its top cochain has degree n+1 and is
/// therefore identically zero on an n-complex.
struct GaugeCurrent {
  int q = 0;
  std::vector<ChainLayer> layers;  // layers[k]: Cech degree k, chain dim q+1+k
  Cochain top;                     // degree n-q, integer entries

  static GaugeCurrent zero(int q, int n);
};

GaugeCurrent operator+(const GaugeCurrent& x, const GaugeCurrent& y);
GaugeCurrent operator-(const GaugeCurrent& x, const GaugeCurrent& y);
bool operator==(const GaugeCurrent& x, const GaugeCurrent& y);

/// Generator tuple of a gauge-current transformation: open-star chain layers
/// W_(k), k in [0, P-1], of dimension q+2+k, plus an integer P-cochain g.
/// The induced current is
///   Delta_(0) = layer_boundary W_(0),
///   Delta_(k) = layer_boundary W_(k) + hat_delta W_(k-1)   (0 < k < P),
///   Delta_(P) = fundamental multiples of g + hat_delta W_(P-1),
///   top       = coboundary of g,
/// and it always passes check_current.  For P = 0 only g is present.
struct CurrentTransformation {
  int q = 0;
  int n = 0;
  std::vector<ChainLayer> gens;  // gens[k]: Cech degree k, chain dim q+2+k
  Cochain g;                     // degree n-q-1, integer entries

  static CurrentTransformation zero(int q, int n);
};

/// Dual gauge q-field: the open-star form-layer tuple evaluated against gauge
/// currents.  With P = n-q-1, layers C_(k) for k in [0, P] hold cochains of
/// degree q+1+k supported on open stars, plus an integer P-chain at the
/// bottom.  Validity:
///   layer_d C_(k) = hat_partial C_(k+1)          (0 <= k < P),
///   star_integral_chain(C_(P)) = bottom,
/// with the bottom an integer cycle; the glued sum of the layer-0 entries is
/// then automatically a closed cochain (the curvature of the dual field).
struct DualGaugeField {
  int q = 0;
  std::vector<FormLayer> layers;  // layers[k]: Cech degree k, form degree q+1+k
  Chain bottom;                   // dimension n-q-1, integer entries

  static DualGaugeField zero(int q, int n);
};

DualGaugeField operator+(const DualGaugeField& x, const DualGaugeField& y);
DualGaugeField operator-(const DualGaugeField& x, const DualGaugeField& y);
bool operator==(const DualGaugeField& x, const DualGaugeField& y);

/// Generator tuple of a dual-field transformation: open-star form layers
/// G_(j), j in [0, P], of Cech degree j+1 and form degree q+1+j, constrained
/// so that the star integral of G_(P) is an integer chain.  The induced dual
/// field is
///   Delta_(k) = hat_partial G_(k) - layer_d G_(k-1)    (G_(-1) = 0),
///   bottom    = star_integral_chain(hat_partial G_(P)),
/// a boundary of the integer chain above, so the bottom class never moves.
struct DualFieldTransformation {
  int q = 0;
  int n = 0;
  std::vector<FormLayer> gens;  // gens[j]: Cech degree j+1, form degree q+1+j

  static DualFieldTransformation zero(int q, int n);
};

/// Dual gauge p-current: the chain-side mirror of a cycle decomposition.
/// Layers C_(k) for k in [0, p] carry chains of dimension p-k supported in
/// the closed star of their Cech k-carrier; the bottom is an integer Cech
/// p-cycle on the carriers.  Validity:
///   layer_boundary C_(k) = cech_partial C_(k+1)    (0 <= k < p),
///   augmentation_chain(C_(p)) = bottom,
/// all operators plain (no support cutting is ever needed on this side).
struct DualGaugeCurrent {
  int p = 0;
  std::vector<ChainLayer> layers;  // layers[k]: Cech degree k, chain dim p-k
  Chain bottom;                    // dimension p, integer entries

  static DualGaugeCurrent zero(int p);
};

DualGaugeCurrent operator+(const DualGaugeCurrent& x, const DualGaugeCurrent& y);
DualGaugeCurrent operator-(const DualGaugeCurrent& x, const DualGaugeCurrent& y);
bool operator==(const DualGaugeCurrent& x, const DualGaugeCurrent& y);

/// Generator tuple of a dual-current transformation: closed-star chain layers
/// H_(j), j in [0, p], of Cech degree j+1 and chain dimension p-j, with the
/// augmentation of H_(p) an integer chain.  The induced dual current is
///   Delta_(k) = cech_partial H_(k) + layer_boundary H_(k-1)   (H_(-1) = 0),
///   bottom    = boundary(augmentation_chain(H_(p))),
/// a Cech boundary, so evaluations only ever move by integers.
struct DualCurrentTransformation {
  int p = 0;
  std::vector<ChainLayer> gens;  // gens[j]: Cech degree j+1, chain dim p-j

  static DualCurrentTransformation zero(int p);
};

/// Shape, support, integrality and every descent rung, checked exactly.
bool check_current(const StarCover& cover, const GaugeCurrent& a);
bool check_dual_field(const StarCover& cover, const DualGaugeField& x);
bool check_dual_current(const StarCover& cover, const DualGaugeCurrent& x);

/// The current induced by a transformation tuple; passes check_current.
GaugeCurrent transformation_current(const StarCover& cover,
                                    const CurrentTransformation& t);

/// The dual field induced by a transformation tuple; passes check_dual_field.
DualGaugeField transformation_dual_field(const StarCover& cover,
                                         const DualFieldTransformation& t);

/// The dual current induced by a transformation tuple; passes
/// check_dual_current.
DualGaugeCurrent transformation_dual_current(const StarCover& cover,
                                             const DualCurrentTransformation& t);

/// The oriented sum of the top simplices, as a chain.
Chain oriented_top_chain(const SimplicialComplex& K);

/// Global chain of dimension q glued from the projected boundaries of layer
/// 0; the curvature of the current.  Zero for every transformation current.
Chain current_curvature(const StarCover& cover, const GaugeCurrent& a);

/// Embeds a gauge p-field as a gauge (n-p-1)-current by capping each layer
/// entry into the oriented top chain and keeping the top cocycle.  Descent is
/// preserved exactly, and gauge transformations of the field induce current
/// transformations of the image.
GaugeCurrent current_from_field(const StarCover& cover, const GaugeField& a);

/// Quantum evaluation of a current against a dual field of the same label:
/// the alternating sum over k of the layer pairings.  The class of the value
/// mod 1 is invariant under transformations of either argument; the raw
/// rational is exposed for the integrality tests behind that invariance.
QuantumIntegral eval_current_on_dualfield(const GaugeCurrent& a,
                                          const DualGaugeField& c);

/// Evaluation of a dual current against a gauge field of the same label;
/// same alternating sum with the roles of chains and forms exchanged.  For
/// the dual current of a cycle decomposition this is literally the quantum
/// integral along the decomposition.
QuantumIntegral eval_dualcurrent_on_field(const DualGaugeCurrent& c,
                                          const GaugeField& a);

/// The unit dual (-1)-field: the partition layers over their integer top
/// cycle.  Its layer-0 glue is the constant 1 and its bottom represents the
/// fundamental class.
DualGaugeField unit_dual_field(const StarCover& cover,
                               const PartitionLayers& mu);
DualGaugeField unit_dual_field(const StarCover& cover);

/// Reinterprets a cycle decomposition as a dual gauge current (the layers and
/// bottom carry over unchanged; only the reading changes).
DualGaugeCurrent dual_current_from_cycle(const CycleDecomposition& d);

/// Dual field with a prescribed integer cycle at the bottom: the top layer
/// places one oriented elementary n-cochain of unit star integral per bottom
/// simplex, and the remaining layers are descended by per-star compact
/// solves.  Throws PreconditionError when the input is not an integer cycle
/// (or, never on a manifold complex, when a star solve fails).
DualGaugeField dual_field_from_cycle(const StarCover& cover,
                                     const Chain& bottom);

/// Decides equivalence of two dual fields of one label by complete-for-the-
/// shipped-manifolds invariants: exact equality of the glued layer-0
/// curvatures, equality of the bottom homology classes over the integers,
/// and agreement mod 1 of evaluations against a fixed deterministic family
/// of probe currents.
bool dual_fields_equivalent(const StarCover& cover, ComplexHomology& hom,
                            const DualGaugeField& x, const DualGaugeField& y);

/// Pushes a gauge p-current through the unit decomposition to the dual gauge
/// p-current with the same evaluations: layer entries are capped against the
/// partition layers (grouped over the front vertex, respectively the back
/// face, of the index simplex), the top cocycle is capped against the
/// partition's top cycle for the bottom.  The defining property
///   eval_dualcurrent_on_field(mu_map(B, mu), A) = B-star-A evaluated on 1
/// holds exactly, not only mod 1.
DualGaugeCurrent mu_map(const StarCover& cover, const GaugeCurrent& b,
                        const PartitionLayers& mu);

/// The canonical gauge p-current of an integer p-cycle, 0 <= p < n: the
/// current whose evaluation tuple reproduces the holonomy of every gauge
/// p-field along z.  Built by climbing per-star boundary solves up the
/// ladder, lifting the final obstruction cochain to an integer cocycle, and
/// then correcting the flat part of the class so the defining evaluations
/// match; the correction is found on cohomology generator probes and the
/// result is verified before it is returned.  Throws PreconditionError when
/// z is not an integer cycle or (model alarm) when no correction verifies.
GaugeCurrent canonical_current_of_cycle(const StarCover& cover,
                                        ComplexHomology& hom, const Chain& z,
                                        const PartitionLayers& mu);
GaugeCurrent canonical_current_of_cycle(const StarCover& cover,
                                        ComplexHomology& hom, const Chain& z);

}  // namespace dbcalc
