#include "dbcalc/layers.hpp"

namespace dbcalc {

namespace {

template <class T>
T support_cut(const StarCover& cover, const Simplex& carrier, const T& v,
              StarSupport sup) {
  return sup == StarSupport::closed ? cover.restrict_closed(carrier, v)
                                    : cover.restrict_open(carrier, v);
}

/// Vertices whose join with s is again a simplex; for the empty carrier
/// these are all vertices (the augmented level of the carrier complexes).
std::vector<Vertex> extension_vertices(const StarCover& cover, const Simplex& s) {
  if (!s.empty()) return cover.complex().cofacet_vertices(s);
  std::vector<Vertex> vs;
  for (const Simplex& v : cover.complex().simplices(0)) vs.push_back(v.front());
  return vs;
}

template <class T>
Layer<T> cech_delta_impl(const StarCover& cover, const Layer<T>& x,
                         StarSupport sup) {
  Layer<T> r(x.cech_degree + 1, x.de_rham_degree);
  for (const auto& [s, v] : x.entries)
    for (Vertex b : extension_vertices(cover, s)) {
      Simplex t;
      int sg = insert_sign(s, b, &t);
      T cut = support_cut(cover, t, v, sup);
      r.add(t, sg > 0 ? cut : Rat(-1) * cut);
    }
  return r;
}

template <class T>
Layer<T> cech_partial_impl(const Layer<T>& x) {
  Layer<T> r(x.cech_degree - 1, x.de_rham_degree);
  for (const auto& [s, v] : x.entries)
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
      r.add(face(s, i), i % 2 == 0 ? v : Rat(-1) * v);
  return r;
}

/// Entries whose least (or greatest) vertex is a.
template <class T>
T vertex_filter(const T& x, Vertex a, bool from_back) {
  T r;
  r.d = x.d;
  for (const auto& [s, v] : x.c)
    if (!s.empty() && (from_back ? s.back() : s.front()) == a) r.c.emplace(s, v);
  return r;
}

template <class T>
Layer<T> h_partial_impl(const StarCover& cover, const Layer<T>& y,
                        bool from_back) {
  Layer<T> r(y.cech_degree + 1, y.de_rham_degree);
  for (const auto& [s, v] : y.entries)
    for (Vertex a : extension_vertices(cover, s)) {
      Simplex t;
      int sg = insert_sign(s, a, &t);
      T f = vertex_filter(v, a, from_back);
      r.add(t, sg > 0 ? f : Rat(-1) * f);
    }
  return r;
}

}  // namespace

FormLayer cech_delta(const StarCover& cover, const FormLayer& x, StarSupport sup) {
  return cech_delta_impl(cover, x, sup);
}

ChainLayer cech_delta(const StarCover& cover, const ChainLayer& x, StarSupport sup) {
  return cech_delta_impl(cover, x, sup);
}

FormLayer cech_partial(const FormLayer& x) { return cech_partial_impl(x); }

ChainLayer cech_partial(const ChainLayer& x) { return cech_partial_impl(x); }

ChainLayer hat_delta(const StarCover& cover, const ChainLayer& x, StarSupport sup) {
  ChainLayer r = cech_delta(cover, x, sup);
  return x.de_rham_degree % 2 != 0 ? Rat(-1) * r : r;
}

FormLayer hat_partial(const FormLayer& x) {
  FormLayer r = cech_partial(x);
  return x.de_rham_degree % 2 != 0 ? Rat(-1) * r : r;
}

FormLayer layer_d(const StarCover& cover, const FormLayer& x, StarSupport sup) {
  FormLayer r(x.cech_degree, x.de_rham_degree + 1);
  for (const auto& [s, v] : x.entries) {
    Cochain dv = sup == StarSupport::closed ? cover.star_coboundary(s, v)
                                            : coboundary(cover.complex(), v);
    r.set(s, std::move(dv));
  }
  return r;
}

ChainLayer layer_boundary(const StarCover& cover, const ChainLayer& x,
                          StarSupport sup) {
  ChainLayer r(x.cech_degree, x.de_rham_degree - 1);
  for (const auto& [s, v] : x.entries) {
    Chain bv = boundary(v);
    if (sup == StarSupport::open) bv = cover.restrict_open(s, bv);
    r.set(s, std::move(bv));
  }
  return r;
}

Rat pairing(const FormLayer& x, const ChainLayer& c) {
  assert(x.cech_degree == c.cech_degree);
  Rat total(0);
  for (const auto& [s, v] : x.entries) {
    auto it = c.entries.find(s);
    if (it != c.entries.end()) total += pairing(v, it->second);
  }
  return total;
}

FormLayer vertexwise_constant_layer(const StarCover& cover, const Cochain& g) {
  FormLayer r(g.d, 0);
  for (const auto& [s, val] : g.c) {
    Cochain w;
    w.d = 0;
    for (const Simplex& t : cover.closed_star(s))
      if (dim(t) == 0) w.c.emplace(t, val);
    r.set(s, std::move(w));
  }
  return r;
}

ChainLayer fundamental_multiples_layer(const StarCover& cover, const Cochain& g) {
  ChainLayer r(g.d, cover.complex().n());
  for (const auto& [s, val] : g.c) r.set(s, val * cover.fundamental_in_star(s));
  return r;
}

ChainLayer degree_minus_one_dual(const StarCover& cover, const Cochain& g) {
  ChainLayer r = fundamental_multiples_layer(cover, g);
  return cover.complex().n() % 2 != 0 ? Rat(-1) * r : r;
}

FormLayer restriction_layer(const StarCover& cover, const Cochain& w) {
  FormLayer r(0, w.d);
  for (const Simplex& v : cover.complex().simplices(0))
    r.set(v, cover.restrict_closed(v, w));
  return r;
}

FormLayer h_delta(const FormLayer& x, bool from_back) {
  FormLayer r(x.cech_degree - 1, x.de_rham_degree);
  for (const auto& [s, v] : x.entries)
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      Cochain f = vertex_filter(v, s[static_cast<std::size_t>(i)], from_back);
      r.add(face(s, i), i % 2 == 0 ? f : Rat(-1) * f);
    }
  return r;
}

Cochain glue_layer(const FormLayer& x, bool from_back) {
  assert(x.cech_degree == 0);
  Cochain w;
  w.d = x.de_rham_degree;
  for (const auto& [s, v] : x.entries)
    w = w + vertex_filter(v, s.front(), from_back);
  return w;
}

ChainLayer h_partial(const StarCover& cover, const ChainLayer& y, bool from_back) {
  return h_partial_impl(cover, y, from_back);
}

FormLayer h_partial(const StarCover& cover, const FormLayer& y, bool from_back) {
  return h_partial_impl(cover, y, from_back);
}

Chain star_integral_chain(const StarCover& cover, const FormLayer& x) {
  int n = cover.complex().n();
  assert(x.de_rham_degree == n);
  Rat jn(dimension_sign(n));
  Chain r;
  r.d = x.cech_degree;
  for (const auto& [s, v] : x.entries)
    r.add(s, jn * pairing(v, cover.fundamental_in_star(s)));
  return r;
}

Chain augmentation_chain(const ChainLayer& x) {
  assert(x.de_rham_degree == 0);
  Chain r;
  r.d = x.cech_degree;
  for (const auto& [s, v] : x.entries) r.add(s, degree_b0(v));
  return r;
}

}  // namespace dbcalc
