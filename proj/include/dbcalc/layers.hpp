#pragma once

#include <cassert>
#include <map>
#include <vector>

#include "dbcalc/chains.hpp"
#include "dbcalc/cover.hpp"

namespace dbcalc {

/// Support model of a layer: entries live in the closed star of their
/// carrier (restriction model) or only on simplices containing the carrier
/// (compact model).
enum class StarSupport { closed, open };

/// One stage of a descent object: a chain or cochain per carrier simplex.
/// cech_degree is the carrier dimension; de_rham_degree the degree of the
/// values.  One entry is stored per sorted carrier; values on arbitrary
/// vertex tuples extend antisymmetrically.
template <class T>
struct Layer {
  int cech_degree = 0;
  int de_rham_degree = 0;
  std::map<Simplex, T> entries;

  Layer() = default;
  Layer(int cech, int de_rham) : cech_degree(cech), de_rham_degree(de_rham) {}

  bool is_zero() const { return entries.empty(); }

  /// Entry at a sorted carrier; a zero of the layer's degree when absent.
  T at(const Simplex& carrier) const {
    auto it = entries.find(carrier);
    if (it != entries.end()) return it->second;
    T z;
    z.d = de_rham_degree;
    return z;
  }

  void add(const Simplex& carrier, const T& v) {
    if (v.is_zero()) return;
    auto it = entries.find(carrier);
    if (it == entries.end()) {
      entries.emplace(carrier, v);
      return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) entries.erase(it);
  }

  void set(const Simplex& carrier, T v) {
    if (v.is_zero())
      entries.erase(carrier);
    else
      entries.insert_or_assign(carrier, std::move(v));
  }

  /// Value on an arbitrary vertex tuple: the permutation sign times the
  /// entry at the sorted carrier; zero when a vertex repeats.
  T signed_entry(const std::vector<Vertex>& tuple) const {
    int inv = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (tuple[i] == tuple[j]) {
          T z;
          z.d = de_rham_degree;
          return z;
        }
        if (tuple[i] > tuple[j]) ++inv;
      }
    Simplex s = tuple;
    std::sort(s.begin(), s.end());
    T v = at(s);
    return (inv % 2 != 0) ? Rat(-1) * v : v;
  }
};

using FormLayer = Layer<Cochain>;
using ChainLayer = Layer<Chain>;

template <class T>
Layer<T> operator+(const Layer<T>& x, const Layer<T>& y) {
  assert(x.cech_degree == y.cech_degree && x.de_rham_degree == y.de_rham_degree);
  Layer<T> r = x;
  for (const auto& [s, v] : y.entries) r.add(s, v);
  return r;
}

template <class T>
Layer<T> operator*(const Rat& q, const Layer<T>& x) {
  Layer<T> r(x.cech_degree, x.de_rham_degree);
  if (q == 0) return r;
  for (const auto& [s, v] : x.entries) r.entries.emplace(s, q * v);
  return r;
}

template <class T>
Layer<T> operator-(const Layer<T>& x, const Layer<T>& y) {
  return x + Rat(-1) * y;
}

template <class T>
bool operator==(const Layer<T>& x, const Layer<T>& y) {
  return x.cech_degree == y.cech_degree &&
         x.de_rham_degree == y.de_rham_degree && x.entries == y.entries;
}

/// Alternating-face sum raising the carrier dimension by one; each term is
/// cut to the destination carrier's star per the support model.
FormLayer cech_delta(const StarCover& cover, const FormLayer& x, StarSupport sup);
ChainLayer cech_delta(const StarCover& cover, const ChainLayer& x, StarSupport sup);

/// Vertex-removal sum lowering the carrier dimension by one, the adjoint of
/// cech_delta under the layer pairing; needs no support bookkeeping.  At
/// carrier dimension 0 the result sits on the empty simplex and is the plain
/// sum of the entries.
FormLayer cech_partial(const FormLayer& x);
ChainLayer cech_partial(const ChainLayer& x);

/// (-1)^(de_rham_degree of input) times the plain operator; this twist makes
/// the carrier-direction and value-direction differentials anticommute.
ChainLayer hat_delta(const StarCover& cover, const ChainLayer& x, StarSupport sup);
FormLayer hat_partial(const FormLayer& x);

/// Entrywise differential, taken inside each carrier's star for the closed
/// model (the compact model needs no cutoff).
FormLayer layer_d(const StarCover& cover, const FormLayer& x, StarSupport sup);
/// Entrywise boundary; the compact model projects each result back onto the
/// open star.
ChainLayer layer_boundary(const StarCover& cover, const ChainLayer& x,
                          StarSupport sup);

/// Sum over carriers of the entrywise evaluation pairing.
Rat pairing(const FormLayer& x, const ChainLayer& c);

/// Carrier s gets the constant g(s) on the vertices of its closed star.
FormLayer vertexwise_constant_layer(const StarCover& cover, const Cochain& g);

/// Carrier s gets g(s) times the oriented top chain of its star.
ChainLayer fundamental_multiples_layer(const StarCover& cover, const Cochain& g);

/// (-1)^n times fundamental_multiples_layer, the adjoint counterpart of
/// vertexwise_constant_layer.
ChainLayer degree_minus_one_dual(const StarCover& cover, const Cochain& g);

/// Closed-star restrictions of one global cochain, carrier dimension 0.
FormLayer restriction_layer(const StarCover& cover, const Cochain& w);

/// Splitting homotopy lowering the carrier dimension on form layers: each
/// removed index acts on the entry by its least-vertex filter (or, with
/// from_back, greatest-vertex filter).  With cech_delta on closed-support
/// layers of positive carrier dimension it composes to the identity.
FormLayer h_delta(const FormLayer& x, bool from_back);

/// Glues a carrier-dimension-0 layer into one global cochain; on layers
/// killed by cech_delta, restriction_layer inverts it.
Cochain glue_layer(const FormLayer& x, bool from_back);

/// Transposed splitting homotopy raising the carrier dimension; with
/// cech_partial it composes to the identity.
ChainLayer h_partial(const StarCover& cover, const ChainLayer& y, bool from_back);
FormLayer h_partial(const StarCover& cover, const FormLayer& y, bool from_back);

/// Pairing of each entry of a top-degree form layer with its star's oriented
/// top chain, times the dimension sign; a chain on the carriers.
Chain star_integral_chain(const StarCover& cover, const FormLayer& x);

/// Entrywise augmentation of a dimension-0 chain layer, as a chain on the
/// carriers.
Chain augmentation_chain(const ChainLayer& x);

/// (-1)^(n(n+1)/2), the sign built into star_integral_chain.
inline int dimension_sign(int n) { return (n * (n + 1) / 2) % 2 != 0 ? -1 : 1; }

}  // namespace dbcalc
