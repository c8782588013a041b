#pragma once

#include <stdexcept>
#include <vector>

#include "dbcalc/chains.hpp"
#include "dbcalc/complex.hpp"
#include "dbcalc/cover.hpp"
#include "dbcalc/gauge_field.hpp"
#include "dbcalc/homology.hpp"
#include "dbcalc/layers.hpp"
#include "dbcalc/linalg.hpp"
#include "dbcalc/rng.hpp"

namespace dbcalc::testing {

inline Cochain random_cochain(const SimplicialComplex& K, int d, Rng& rng,
                              int terms = 4) {
  Cochain w;
  w.d = d;
  const auto& ss = K.simplices(d);
  for (int i = 0; i < terms; ++i)
    w.add(ss[rng.below(ss.size())], rng.rat());
  return w;
}

inline Chain random_chain(const SimplicialComplex& K, int d, Rng& rng,
                          int terms = 4) {
  Chain c;
  c.d = d;
  const auto& ss = K.simplices(d);
  for (int i = 0; i < terms; ++i)
    c.add(ss[rng.below(ss.size())], rng.rat());
  return c;
}

/// Random layer with entries honoring the given support model.
inline FormLayer random_form_layer(const StarCover& cover, int cech, int r,
                                   StarSupport sup, Rng& rng, int carriers = 3,
                                   int terms = 3) {
  FormLayer L(cech, r);
  const auto& cs = cover.complex().simplices(cech);
  if (cs.empty()) return L;
  for (int i = 0; i < carriers; ++i) {
    const Simplex& s = cs[rng.below(cs.size())];
    const auto& star = sup == StarSupport::closed ? cover.closed_star(s)
                                                  : cover.open_star(s);
    std::vector<Simplex> cand;
    for (const Simplex& t : star)
      if (dim(t) == r) cand.push_back(t);
    if (cand.empty()) continue;
    Cochain w;
    w.d = r;
    for (int j = 0; j < terms; ++j) w.add(cand[rng.below(cand.size())], rng.rat());
    L.add(s, w);
  }
  return L;
}

inline ChainLayer random_chain_layer(const StarCover& cover, int cech, int r,
                                     StarSupport sup, Rng& rng, int carriers = 3,
                                     int terms = 3) {
  ChainLayer L(cech, r);
  const auto& cs = cover.complex().simplices(cech);
  if (cs.empty()) return L;
  for (int i = 0; i < carriers; ++i) {
    const Simplex& s = cs[rng.below(cs.size())];
    const auto& star = sup == StarSupport::closed ? cover.closed_star(s)
                                                  : cover.open_star(s);
    std::vector<Simplex> cand;
    for (const Simplex& t : star)
      if (dim(t) == r) cand.push_back(t);
    if (cand.empty()) continue;
    Chain w;
    w.d = r;
    for (int j = 0; j < terms; ++j) w.add(cand[rng.below(cand.size())], rng.rat());
    L.add(s, w);
  }
  return L;
}

/// Integer-valued closed-star chain layer; entries stay honest chains of the
/// layer's de Rham degree.
inline ChainLayer random_integer_chain_layer(const StarCover& cover, int cech,
                                             int r, Rng& rng, int carriers = 3,
                                             int terms = 3) {
  ChainLayer L(cech, r);
  const auto& cs = cover.complex().simplices(cech);
  if (cs.empty()) return L;
  for (int i = 0; i < carriers; ++i) {
    const Simplex& s = cs[rng.below(cs.size())];
    std::vector<Simplex> cand;
    for (const Simplex& t : cover.closed_star(s))
      if (dim(t) == r) cand.push_back(t);
    if (cand.empty()) continue;
    Chain w;
    w.d = r;
    for (int j = 0; j < terms; ++j)
      w.add(cand[rng.below(cand.size())], Rat(rng.integer()));
    L.add(s, w);
  }
  return L;
}

struct FlatSample {
  GaugeField field;
  Cochain rep;  // degree-p class representative the field was built from
};

/// Flat field with random torsion and free holonomy in degree p.
inline FlatSample random_flat_sample(const StarCover& cover,
                                     ComplexHomology& hom, int p, Rng& rng) {
  Cochain r;
  r.d = p;
  if (p + 1 <= hom.complex().n()) {
    auto& q = hom.cohomology(p + 1);
    const auto& orders = q.torsion_orders();
    for (std::size_t j = 0; j < orders.size(); ++j) {
      std::vector<Int> rhs = q.torsion_generators()[j];
      for (auto& v : rhs) v *= orders[j];
      auto lift = q.preimage(rhs);
      if (!lift) throw std::logic_error("torsion multiple must bound");
      Rat scale(rng.integer(), orders[j]);
      scale.canonicalize();
      r = r + scale * hom.vector_cochain(p, *lift);
    }
  }
  for (const auto& gen : hom.cohomology(p).free_generators())
    r = r + rng.rat(3, 5) * hom.vector_cochain(p, gen);
  return {field_from_flat_class(cover, FlatClassRep(p, r)), r};
}

/// Closed rational d-cochain in the span of the free cohomology generators
/// whose pairings against the free homology generator cycles hit the targets.
inline Cochain closed_rep_with_periods(ComplexHomology& hom, int d,
                                       const std::vector<Rat>& targets) {
  auto& hq = hom.homology(d);
  auto& cq = hom.cohomology(d);
  std::size_t m = targets.size();
  if (static_cast<std::size_t>(hq.betti()) != m ||
      static_cast<std::size_t>(cq.betti()) != m)
    throw std::logic_error("period solve: rank mismatch");
  std::vector<Cochain> gens;
  std::vector<Chain> cycles;
  for (std::size_t j = 0; j < m; ++j) {
    gens.push_back(hom.vector_cochain(d, cq.free_generators()[j]));
    cycles.push_back(hom.vector_chain(d, hq.free_generators()[j]));
  }
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = pairing(gens[j], cycles[i]);
    aug[i][m] = targets[i];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && aug[piv][col] == 0) ++piv;
    if (piv == m) throw std::logic_error("period solve: singular pairing");
    std::swap(aug[piv], aug[col]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= m; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  Cochain r;
  r.d = d;
  for (std::size_t j = 0; j < m; ++j)
    r = r + (aug[j][m] / aug[j][j]) * gens[j];
  return r;
}

/// Independent cup reference: scans every simplex of the target degree
/// instead of growing supports.
inline Cochain naive_cup(const SimplicialComplex& K, const Cochain& x,
                         const Cochain& y) {
  Cochain r;
  r.d = x.d + y.d;
  if (r.d > K.n()) return r;
  for (const Simplex& t : K.simplices(r.d)) {
    Rat v = x.at(front_face(t, x.d)) * y.at(back_face(t, y.d));
    if (v != 0) r.c[t] = v;
  }
  return r;
}

/// Rational rank by plain fraction-free-less Gaussian elimination; written
/// separately from the solver machinery on purpose.
inline int qrank(const ZMat& m) {
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols));
    for (int j = 0; j < m.cols; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(m.at(i, j));
  }
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int p = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(rank)]);
    for (int i = rank + 1; i < m.rows; ++i) {
      Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] /
              a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace dbcalc::testing
