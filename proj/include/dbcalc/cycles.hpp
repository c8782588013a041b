#pragma once

#include <vector>

#include "dbcalc/gauge_field.hpp"

namespace dbcalc {

/// Star-subordinate decomposition of an integer p-cycle z: chain layers c_(k)
/// for k in [0, p] (Cech degree k, chain degree p-k, entries supported in the
/// closed star of their carrier) plus the bottom integer p-chain of
/// per-carrier degrees.  The identities tying the tuple together:
///   sum over vertex carriers of c_(0)  = z,
///   cech_partial c_(k)                 = entrywise boundary of c_(k-1),
///   bottom                             = per-carrier degree of c_(p),
/// and the bottom chain is then itself a cycle.
struct CycleDecomposition {
  int p = 0;
  std::vector<ChainLayer> layers;  // layers[k]: Cech degree k, chain degree p-k
  Chain bottom;                    // degree p, integer coefficients

  static CycleDecomposition zero(int p);
};

/// Decomposes an integer cycle by assigning each simplex to the star of its
/// first vertex (last vertex when from_back is set) and walking boundaries up
/// the Cech ladder with the raising homotopy.  Throws PreconditionError on
/// rational coefficients or on a non-cycle.
CycleDecomposition decompose_cycle(const StarCover& cover, const Chain& z,
                                   bool from_back = false);

/// True iff d is integral, carried in closed stars, and satisfies every
/// decomposition identity for the cycle z.
bool check_decomposition(const StarCover& cover, const CycleDecomposition& d,
                         const Chain& z);

/// Quantum integral of a gauge field along a cycle decomposition: the
/// alternating carrier-matched pairing  sum_k (-1)^k <A^(k), c_(k)>.  Only
/// the class mod 1 is independent of the decomposition and of the gauge
/// representative; the raw rational is exposed for exactness tests.
struct QuantumIntegral {
  Rat raw;

  RmodZ value() const { return RmodZ(raw); }
};

QuantumIntegral integrate(const GaugeField& a, const CycleDecomposition& d);

/// Holonomy mod 1 along an integer cycle: the integral over the canonical
/// front-vertex decomposition.
RmodZ holonomy(const StarCover& cover, const GaugeField& a, const Chain& z);

}  // namespace dbcalc
