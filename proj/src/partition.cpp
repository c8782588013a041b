#include "dbcalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dbcalc {

namespace {

/// (-1)^k times the alternating sum over all orderings (v_s0, ..., v_sk) of
/// the carrier's vertices of e^{v_s0} cup d e^{v_s1} cup ... cup d e^{v_sk}.
Cochain antisym_cup_value(const SimplicialComplex& K, const Simplex& s) {
  int k = dim(s);
  std::vector<int> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  Cochain total;
  total.d = k;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    Cochain term = elementary_cochain(Simplex{s[static_cast<std::size_t>(perm[0])]});
    for (int i = 1; i <= k; ++i) {
      Cochain de = coboundary(
          K, elementary_cochain(Simplex{s[static_cast<std::size_t>(perm[i])]}));
      term = cup(K, term, de);
    }
    total = inv % 2 != 0 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return k % 2 != 0 ? Rat(-1) * total : total;
}

std::vector<FormLayer> cup_branch(const StarCover& cover) {
  const SimplicialComplex& K = cover.complex();
  std::vector<FormLayer> mu;
  for (int k = 0; k <= K.n(); ++k) {
    FormLayer L(k, k);
    for (const Simplex& s : K.simplices(k)) L.set(s, antisym_cup_value(K, s));
    mu.push_back(std::move(L));
  }
  return mu;
}

std::vector<FormLayer> elementary_branch(const StarCover& cover) {
  const SimplicialComplex& K = cover.complex();
  std::vector<FormLayer> mu;
  for (int k = 0; k <= K.n(); ++k) {
    FormLayer L(k, k);
    Rat sk(dimension_sign(k));
    for (const Simplex& s : K.simplices(k)) L.set(s, sk * elementary_cochain(s));
    mu.push_back(std::move(L));
  }
  return mu;
}

bool descent_ok(const StarCover& cover, const std::vector<FormLayer>& mu) {
  const SimplicialComplex& K = cover.complex();
  if (!(cech_partial(mu[0]).at(Simplex{}) == unit_cochain(K))) return false;
  for (int k = 1; k <= K.n(); ++k) {
    FormLayer lhs = layer_d(cover, mu[static_cast<std::size_t>(k) - 1],
                            StarSupport::open);
    if (!(lhs == hat_partial(mu[static_cast<std::size_t>(k)]))) return false;
  }
  return true;
}

}  // namespace

PartitionLayers partition_layers(const StarCover& cover) {
  PartitionLayers P;
  P.mu = cup_branch(cover);
  P.branch = "antisymmetrized-cup";
  if (!descent_ok(cover, P.mu)) {
    P.mu = elementary_branch(cover);
    P.branch = "elementary";
    if (!descent_ok(cover, P.mu))
      throw std::logic_error("partition_layers: descent identities failed");
  }
  P.m = star_integral_chain(cover, P.mu[static_cast<std::size_t>(cover.complex().n())]);
  if (!is_integral(P.m) || !boundary(P.m).is_zero())
    throw std::logic_error("partition_layers: star integral is not an integer cycle");
  return P;
}

}  // namespace dbcalc
