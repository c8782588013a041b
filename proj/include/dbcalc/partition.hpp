#pragma once

#include <string>
#include <vector>

#include "dbcalc/layers.hpp"

namespace dbcalc {

/// Unit decomposition of the cover: compact form layers mu[k] of equal
/// carrier and value degree k, with d mu[k-1] = hat_partial mu[k], entries
/// of mu[0] summing to the constant 1, and the star integral of mu[n] an
/// integer cycle m on the top carriers representing the fundamental class.
struct PartitionLayers {
  std::vector<FormLayer> mu;  // k = 0 .. n
  Chain m;                    // integer weights of the top carriers
  std::string branch;         // "antisymmetrized-cup" or "elementary"
  bool top_corrected = false; // no correction chain exists on this cover
};

/// Builds the unit decomposition.  The antisymmetrized cup construction is
/// evaluated first; when its descent identities fail (the cup product does
/// not commute at the cochain level, which breaks the layers with three or
/// more indices), the elementary-cochain layers replace it and the branch
/// field records the substitution.
PartitionLayers partition_layers(const StarCover& cover);

}  // namespace dbcalc
