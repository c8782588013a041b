#include "dbcalc/currents.hpp"

#include <stdexcept>

#include "dbcalc/random_objects.hpp"

namespace dbcalc {

namespace {

int pow_sign(int e) { return e % 2 != 0 ? -1 : 1; }

bool carrier_shape_ok(const SimplicialComplex& k, const Simplex& s, int cech) {
  return dim(s) == cech && k.has(s);
}

// Every simplex of the entry lies in the carrier's star per the model.
bool chain_supported(const StarCover& cover, const Simplex& carrier,
                     const Chain& c, StarSupport sup) {
  for (const auto& [s, v] : c.c) {
    (void)v;
    if (sup == StarSupport::open ? !cover.in_open_star(carrier, s)
                                 : !cover.in_closed_star(carrier, s))
      return false;
  }
  return true;
}

bool cochain_supported(const StarCover& cover, const Simplex& carrier,
                       const Cochain& c, StarSupport sup) {
  for (const auto& [s, v] : c.c) {
    (void)v;
    if (sup == StarSupport::open ? !cover.in_open_star(carrier, s)
                                 : !cover.in_closed_star(carrier, s))
      return false;
  }
  return true;
}

Simplex vertex_simplex(Vertex v) { return Simplex{v}; }

// Sum of the layer-0 entries, the glued object of an open-star form tuple.
Cochain glue_entries(const FormLayer& x) {
  Cochain g;
  g.d = x.de_rham_degree;
  for (const auto& [s, v] : x.entries) {
    (void)s;
    g = g + v;
  }
  return g;
}

Chain glue_entries(const ChainLayer& x) {
  Chain g;
  g.d = x.de_rham_degree;
  for (const auto& [s, v] : x.entries) {
    (void)s;
    g = g + v;
  }
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// tuple types

GaugeCurrent GaugeCurrent::zero(int q, int n) {
  GaugeCurrent c;
  c.q = q;
  int cap = n - q - 1;
  for (int k = 0; k <= cap; ++k) c.layers.emplace_back(k, q + 1 + k);
  c.top.d = cap + 1;
  return c;
}

GaugeCurrent operator+(const GaugeCurrent& x, const GaugeCurrent& y) {
  if (x.q != y.q || x.layers.size() != y.layers.size())
    throw PreconditionError("current sum needs matching labels");
  GaugeCurrent r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] + y.layers[k];
  r.top = r.top + y.top;
  return r;
}

GaugeCurrent operator-(const GaugeCurrent& x, const GaugeCurrent& y) {
  if (x.q != y.q || x.layers.size() != y.layers.size())
    throw PreconditionError("current difference needs matching labels");
  GaugeCurrent r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] - y.layers[k];
  r.top = r.top - y.top;
  return r;
}

bool operator==(const GaugeCurrent& x, const GaugeCurrent& y) {
  return x.q == y.q && x.layers == y.layers && x.top == y.top;
}

CurrentTransformation CurrentTransformation::zero(int q, int n) {
  CurrentTransformation t;
  t.q = q;
  t.n = n;
  int cap = n - q - 1;
  for (int k = 0; k + 1 <= cap; ++k) t.gens.emplace_back(k, q + 2 + k);
  t.g.d = cap;
  return t;
}

DualGaugeField DualGaugeField::zero(int q, int n) {
  DualGaugeField x;
  x.q = q;
  int cap = n - q - 1;
  for (int k = 0; k <= cap; ++k) x.layers.emplace_back(k, q + 1 + k);
  x.bottom.d = cap;
  return x;
}

DualGaugeField operator+(const DualGaugeField& x, const DualGaugeField& y) {
  if (x.q != y.q || x.layers.size() != y.layers.size())
    throw PreconditionError("dual field sum needs matching labels");
  DualGaugeField r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] + y.layers[k];
  r.bottom = r.bottom + y.bottom;
  return r;
}

DualGaugeField operator-(const DualGaugeField& x, const DualGaugeField& y) {
  if (x.q != y.q || x.layers.size() != y.layers.size())
    throw PreconditionError("dual field difference needs matching labels");
  DualGaugeField r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] - y.layers[k];
  r.bottom = r.bottom - y.bottom;
  return r;
}

bool operator==(const DualGaugeField& x, const DualGaugeField& y) {
  return x.q == y.q && x.layers == y.layers && x.bottom == y.bottom;
}

DualFieldTransformation DualFieldTransformation::zero(int q, int n) {
  DualFieldTransformation t;
  t.q = q;
  t.n = n;
  int cap = n - q - 1;
  for (int j = 0; j <= cap; ++j) t.gens.emplace_back(j + 1, q + 1 + j);
  return t;
}

DualGaugeCurrent DualGaugeCurrent::zero(int p) {
  DualGaugeCurrent c;
  c.p = p;
  for (int k = 0; k <= p; ++k) c.layers.emplace_back(k, p - k);
  c.bottom.d = p;
  return c;
}

DualGaugeCurrent operator+(const DualGaugeCurrent& x, const DualGaugeCurrent& y) {
  if (x.p != y.p) throw PreconditionError("dual current sum needs matching labels");
  DualGaugeCurrent r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] + y.layers[k];
  r.bottom = r.bottom + y.bottom;
  return r;
}

DualGaugeCurrent operator-(const DualGaugeCurrent& x, const DualGaugeCurrent& y) {
  if (x.p != y.p)
    throw PreconditionError("dual current difference needs matching labels");
  DualGaugeCurrent r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] - y.layers[k];
  r.bottom = r.bottom - y.bottom;
  return r;
}

bool operator==(const DualGaugeCurrent& x, const DualGaugeCurrent& y) {
  return x.p == y.p && x.layers == y.layers && x.bottom == y.bottom;
}

DualCurrentTransformation DualCurrentTransformation::zero(int p) {
  DualCurrentTransformation t;
  t.p = p;
  for (int j = 0; j <= p; ++j) t.gens.emplace_back(j + 1, p - j);
  return t;
}

// ---------------------------------------------------------------------------
// validity

bool check_current(const StarCover& cover, const GaugeCurrent& a) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  if (a.q < -1 || a.q > n - 1) return false;
  int cap = n - a.q - 1;
  if (static_cast<int>(a.layers.size()) != cap + 1) return false;
  for (int k = 0; k <= cap; ++k) {
    const ChainLayer& L = a.layers[k];
    if (L.cech_degree != k || L.de_rham_degree != a.q + 1 + k) return false;
    for (const auto& [s, v] : L.entries) {
      if (!carrier_shape_ok(kx, s, k)) return false;
      if (v.d != L.de_rham_degree) return false;
      if (!chain_supported(cover, s, v, StarSupport::open)) return false;
    }
  }
  if (a.top.d != cap + 1 || !is_integral(a.top)) return false;
  if (a.q == -1 && !a.top.is_zero()) return false;
  if (!coboundary(kx, a.top).is_zero()) return false;
  for (int k = 1; k <= cap; ++k) {
    ChainLayer lhs = hat_delta(cover, a.layers[k - 1], StarSupport::open);
    ChainLayer rhs = layer_boundary(cover, a.layers[k], StarSupport::open);
    if (!(lhs + rhs).is_zero()) return false;
  }
  ChainLayer top_rung = hat_delta(cover, a.layers[cap], StarSupport::open);
  if (!(top_rung == degree_minus_one_dual(cover, a.top))) return false;
  return true;
}

bool check_dual_field(const StarCover& cover, const DualGaugeField& x) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  if (x.q < -1 || x.q > n - 1) return false;
  int cap = n - x.q - 1;
  if (static_cast<int>(x.layers.size()) != cap + 1) return false;
  for (int k = 0; k <= cap; ++k) {
    const FormLayer& L = x.layers[k];
    if (L.cech_degree != k || L.de_rham_degree != x.q + 1 + k) return false;
    for (const auto& [s, v] : L.entries) {
      if (!carrier_shape_ok(kx, s, k)) return false;
      if (v.d != L.de_rham_degree) return false;
      if (!cochain_supported(cover, s, v, StarSupport::open)) return false;
    }
  }
  for (int k = 0; k < cap; ++k) {
    FormLayer lhs = layer_d(cover, x.layers[k], StarSupport::open);
    if (!(lhs == hat_partial(x.layers[k + 1]))) return false;
  }
  if (x.bottom.d != cap || !is_integral(x.bottom)) return false;
  if (!boundary(x.bottom).is_zero()) return false;
  if (!(star_integral_chain(cover, x.layers[cap]) == x.bottom)) return false;
  // the glued layer-0 sum is the curvature; it must be closed
  if (!coboundary(kx, glue_entries(x.layers[0])).is_zero()) return false;
  return true;
}

bool check_dual_current(const StarCover& cover, const DualGaugeCurrent& x) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  if (x.p < 0 || x.p > n) return false;
  if (static_cast<int>(x.layers.size()) != x.p + 1) return false;
  for (int k = 0; k <= x.p; ++k) {
    const ChainLayer& L = x.layers[k];
    if (L.cech_degree != k || L.de_rham_degree != x.p - k) return false;
    for (const auto& [s, v] : L.entries) {
      if (!carrier_shape_ok(kx, s, k)) return false;
      if (v.d != L.de_rham_degree) return false;
      if (!chain_supported(cover, s, v, StarSupport::closed)) return false;
    }
  }
  for (int k = 0; k + 1 <= x.p; ++k) {
    ChainLayer lhs = layer_boundary(cover, x.layers[k], StarSupport::closed);
    if (!(lhs == cech_partial(x.layers[k + 1]))) return false;
  }
  if (x.bottom.d != x.p || !is_integral(x.bottom)) return false;
  if (!boundary(x.bottom).is_zero()) return false;
  if (!(augmentation_chain(x.layers[x.p]) == x.bottom)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// transformations

GaugeCurrent transformation_current(const StarCover& cover,
                                    const CurrentTransformation& t) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int cap = n - t.q - 1;
  if (t.q < -1 || cap < 0 || static_cast<int>(t.gens.size()) != cap)
    throw PreconditionError("current transformation has the wrong shape");
  if (t.g.d != cap || !is_integral(t.g))
    throw PreconditionError("current transformation needs an integer cochain");
  GaugeCurrent r = GaugeCurrent::zero(t.q, n);
  for (int k = 0; k <= cap; ++k) {
    ChainLayer L(k, t.q + 1 + k);
    if (k < cap) L = layer_boundary(cover, t.gens[k], StarSupport::open);
    if (k > 0)
      L = L + hat_delta(cover, t.gens[k - 1], StarSupport::open);
    if (k == cap) L = L + fundamental_multiples_layer(cover, t.g);
    r.layers[k] = L;
  }
  r.top = coboundary(kx, t.g);
  return r;
}

DualGaugeField transformation_dual_field(const StarCover& cover,
                                         const DualFieldTransformation& t) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int cap = n - t.q - 1;
  if (t.q < -1 || cap < 0 || static_cast<int>(t.gens.size()) != cap + 1)
    throw PreconditionError("dual field transformation has the wrong shape");
  if (!is_integral(star_integral_chain(cover, t.gens[cap])))
    throw PreconditionError(
        "dual field transformation needs an integral star integral");
  DualGaugeField r = DualGaugeField::zero(t.q, n);
  for (int k = 0; k <= cap; ++k) {
    FormLayer L = hat_partial(t.gens[k]);
    if (k > 0) L = L - layer_d(cover, t.gens[k - 1], StarSupport::open);
    r.layers[k] = L;
  }
  r.bottom = star_integral_chain(cover, hat_partial(t.gens[cap]));
  return r;
}

DualGaugeCurrent transformation_dual_current(const StarCover& cover,
                                             const DualCurrentTransformation& t) {
  int n = cover.complex().n();
  if (t.p < 0 || t.p > n || static_cast<int>(t.gens.size()) != t.p + 1)
    throw PreconditionError("dual current transformation has the wrong shape");
  if (!is_integral(augmentation_chain(t.gens[t.p])))
    throw PreconditionError(
        "dual current transformation needs an integral augmentation");
  DualGaugeCurrent r = DualGaugeCurrent::zero(t.p);
  for (int k = 0; k <= t.p; ++k) {
    ChainLayer L = cech_partial(t.gens[k]);
    if (k > 0) L = L + layer_boundary(cover, t.gens[k - 1], StarSupport::closed);
    r.layers[k] = L;
  }
  r.bottom = boundary(augmentation_chain(t.gens[t.p]));
  return r;
}

// ---------------------------------------------------------------------------
// constructors and evaluations

Chain oriented_top_chain(const SimplicialComplex& K) {
  Chain z;
  z.d = K.n();
  for (const auto& [top, sgn] : K.orientation()) z.c[top] = Rat(sgn);
  return z;
}

Chain current_curvature(const StarCover& cover, const GaugeCurrent& a) {
  Chain f = glue_entries(layer_boundary(cover, a.layers[0], StarSupport::open));
  f.d = a.q;
  return f;
}

GaugeCurrent current_from_field(const StarCover& cover, const GaugeField& a) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int p = a.p;
  if (p < 0 || p > n) throw PreconditionError("field degree out of range");
  Chain z = oriented_top_chain(kx);
  GaugeCurrent r = GaugeCurrent::zero(n - p - 1, n);
  for (int k = 0; k <= p; ++k) {
    Rat eta(pow_sign((p - k) * (n + 1)));
    for (const auto& [s, x] : a.layers[k].entries) {
      Chain c = cover.restrict_open(s, cap_front(x, z));
      if (!c.is_zero()) r.layers[k].set(s, eta * c);
    }
  }
  r.top = a.top;
  return r;
}

QuantumIntegral eval_current_on_dualfield(const GaugeCurrent& a,
                                          const DualGaugeField& c) {
  if (a.q != c.q || a.layers.size() != c.layers.size())
    throw PreconditionError("evaluation needs matching labels");
  Rat raw(0);
  for (std::size_t k = 0; k < a.layers.size(); ++k) {
    Rat term = pairing(c.layers[k], a.layers[k]);
    raw += (k % 2 != 0) ? -term : term;
  }
  return {raw};
}

QuantumIntegral eval_dualcurrent_on_field(const DualGaugeCurrent& c,
                                          const GaugeField& a) {
  if (c.p != a.p || c.layers.size() != a.layers.size())
    throw PreconditionError("evaluation needs matching labels");
  Rat raw(0);
  for (std::size_t k = 0; k < c.layers.size(); ++k) {
    Rat term = pairing(a.layers[k], c.layers[k]);
    raw += (k % 2 != 0) ? -term : term;
  }
  return {raw};
}

DualGaugeField unit_dual_field(const StarCover& cover,
                               const PartitionLayers& mu) {
  int n = cover.complex().n();
  if (static_cast<int>(mu.mu.size()) != n + 1)
    throw PreconditionError("partition layers have the wrong shape");
  DualGaugeField r = DualGaugeField::zero(-1, n);
  r.layers = mu.mu;
  r.bottom = mu.m;
  return r;
}

DualGaugeField unit_dual_field(const StarCover& cover) {
  return unit_dual_field(cover, partition_layers(cover));
}

DualGaugeCurrent dual_current_from_cycle(const CycleDecomposition& d) {
  DualGaugeCurrent r;
  r.p = d.p;
  r.layers = d.layers;
  r.bottom = d.bottom;
  return r;
}

DualGaugeField dual_field_from_cycle(const StarCover& cover,
                                     const Chain& bottom) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int cap = bottom.d;
  if (cap < 0 || cap > n) throw PreconditionError("bottom dimension out of range");
  if (!is_integral(bottom) || !boundary(bottom).is_zero())
    throw PreconditionError("dual field needs an integer cycle at the bottom");
  DualGaugeField r = DualGaugeField::zero(n - cap - 1, n);
  r.bottom = bottom;
  int sn = dimension_sign(n);
  for (const auto& [sig, w] : bottom.c) {
    // one elementary cochain of unit star integral per bottom simplex
    const Simplex* t = nullptr;
    for (const Simplex& u : cover.open_star(sig))
      if (dim(u) == n) {
        t = &u;
        break;
      }
    if (t == nullptr) throw std::logic_error("carrier star has no top simplex");
    Cochain e;
    e.d = n;
    e.add(*t, w * Rat(sn * kx.orientation_of(*t)));
    r.layers[cap].set(sig, e);
  }
  for (int k = cap - 1; k >= 0; --k) {
    FormLayer rhs = hat_partial(r.layers[k + 1]);
    for (const Simplex& s : kx.simplices(k)) {
      Cochain target = rhs.at(s);
      auto y = cover.solve_compact_d(s, r.layers[k].de_rham_degree, target);
      if (!y) throw PreconditionError("dual field descent solve failed");
      if (!y->is_zero()) r.layers[k].set(s, *y);
    }
  }
  return r;
}

bool dual_fields_equivalent(const StarCover& cover, ComplexHomology& hom,
                            const DualGaugeField& x, const DualGaugeField& y) {
  if (x.q != y.q || x.layers.size() != y.layers.size())
    throw PreconditionError("equivalence needs matching labels");
  int n = cover.complex().n();
  int cap = n - x.q - 1;
  // transformations keep the glued curvature on the nose
  if (!(glue_entries(x.layers[0]) == glue_entries(y.layers[0]))) return false;
  // the bottom only ever moves by boundaries of integer chains
  Chain diff = x.bottom - y.bottom;
  if (!diff.is_zero() &&
      !hom.homology(cap).is_zero_class(hom.chain_vector(diff)))
    return false;
  // evaluation agreement against a fixed probe family
  Rng rng(0x0dd5ca1eu);
  for (int i = 0; i < 8; ++i) {
    GaugeField f = random_gauge_field(cover, hom, cap, rng);
    GaugeCurrent c = current_from_field(cover, f);
    Rat gap = eval_current_on_dualfield(c, x).raw -
              eval_current_on_dualfield(c, y).raw;
    if (!is_integer(gap)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// the unit-decomposition pushforward

DualGaugeCurrent mu_map(const StarCover& cover, const GaugeCurrent& b,
                        const PartitionLayers& mu) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int pb = b.q;
  if (pb < 0 || pb > n - 1)
    throw PreconditionError("pushforward label out of range");
  int qq = n - pb - 1;
  DualGaugeCurrent r = DualGaugeCurrent::zero(pb);
  Chain z = oriented_top_chain(kx);

  // carrier-0 seed: layer entries capped into the partition layers, grouped
  // over the least vertex of the shared index simplex
  ChainLayer seed(0, pb + 1);
  for (int k = 0; k <= qq; ++k) {
    Rat sg(pow_sign(k));
    for (const auto& [w, bw] : b.layers[k].entries) {
      Chain val = cap_back(mu.mu[k].at(w), bw);
      if (!val.is_zero()) seed.add(vertex_simplex(w.front()), sg * val);
    }
  }
  for (const auto& [v, ch] : seed.entries) {
    Chain bd = boundary(ch);
    if (!bd.is_zero()) r.layers[0].add(v, bd);
  }

  // top-cocycle terms: the front face feeds the cocycle, the back face is
  // the carrier
  for (int l = 0; l <= pb; ++l) {
    Rat zeta(pow_sign((pb + 1) * (l + 1)));
    for (const Simplex& s : kx.simplices(qq + 1 + l)) {
      Rat bf = b.top.at(front_face(s, qq + 1));
      if (bf == 0) continue;
      Chain val = cap_back(mu.mu[static_cast<std::size_t>(qq + 1 + l)].at(s), z);
      if (val.is_zero()) continue;
      r.layers[l].add(back_face(s, l), (zeta * bf) * val);
    }
  }
  r.bottom = cap_back(b.top, mu.m);
  return r;
}

// ---------------------------------------------------------------------------
// canonical current of a cycle

namespace {

// Climbs the descent ladder of the cycle by per-star boundary solves and
// lifts the final obstruction to an integer cocycle.  The outcome is a valid
// current with curvature z whose flat part is whatever the particular solves
// produced; the caller corrects it.
GaugeCurrent current_staircase(const StarCover& cover, ComplexHomology& hom,
                               const Chain& z) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int p = z.d;
  int qq = n - p - 1;
  GaugeCurrent x = GaugeCurrent::zero(p, n);
  for (const Simplex& v : kx.simplices(0)) {
    Chain rhs = cover.restrict_open(v, z);
    auto y = cover.solve_star_boundary(v, p + 1, rhs);
    if (!y) throw PreconditionError("canonical current base solve failed");
    if (!y->is_zero()) x.layers[0].set(v, *y);
  }
  for (int k = 1; k <= qq; ++k) {
    ChainLayer r = Rat(-1) * hat_delta(cover, x.layers[k - 1], StarSupport::open);
    for (const Simplex& s : kx.simplices(k)) {
      Chain rhs = r.at(s);
      auto y = cover.solve_star_boundary(s, p + 1 + k, rhs);
      if (!y) throw PreconditionError("canonical current ladder solve failed");
      if (!y->is_zero()) x.layers[k].set(s, *y);
    }
  }
  // obstruction cochain on the (qq+1)-carriers: each final-rung entry is a
  // rational multiple of the oriented star chain
  ChainLayer rung = hat_delta(cover, x.layers[qq], StarSupport::open);
  Cochain lam;
  lam.d = qq + 1;
  for (const Simplex& s : kx.simplices(qq + 1)) {
    Chain e = rung.at(s);
    if (e.is_zero()) continue;
    const Chain& zs = cover.fundamental_in_star(s);
    Rat c = e.c.begin()->second / zs.at(e.c.begin()->first);
    if (!(e == c * zs))
      throw std::logic_error("final rung is not a star multiple");
    lam.add(s, Rat(pow_sign(n)) * c);
  }
  auto split = integral_cocycle_split(hom, lam);
  if (!split)
    throw PreconditionError("canonical current obstruction is not integral");
  if (!split->beta.is_zero())
    x.layers[qq] =
        x.layers[qq] - fundamental_multiples_layer(cover, split->beta);
  x.top = split->u;
  return x;
}

}  // namespace

GaugeCurrent canonical_current_of_cycle(const StarCover& cover,
                                        ComplexHomology& hom, const Chain& z,
                                        const PartitionLayers& mu) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int p = z.d;
  if (p < 0 || p > n - 1) throw PreconditionError("cycle degree out of range");
  if (!is_integral(z)) throw PreconditionError("canonical current needs an integer cycle");
  if (!boundary(z).is_zero()) throw PreconditionError("not a cycle");
  if (z.is_zero()) return GaugeCurrent::zero(p, n);
  int qq = n - p - 1;

  GaugeCurrent base = current_staircase(cover, hom, z);
  CycleDecomposition dz = decompose_cycle(cover, z);

  // probe fields spanning the cohomology classes the current can feel
  auto& cq = hom.cohomology(p + 1);
  std::vector<GaugeField> probes;
  std::size_t free_count = cq.free_generators().size();
  for (const auto& g : cq.free_generators())
    probes.push_back(
        field_from_curvature(cover, hom, hom.vector_cochain(p + 1, g), p));
  for (const auto& g : cq.torsion_generators())
    probes.push_back(
        field_from_curvature(cover, hom, hom.vector_cochain(p + 1, g), p));
  Rng rng(0xcafe5eedu);
  for (int i = 0; i < 3; ++i)
    probes.push_back(random_gauge_field(cover, hom, p, rng));

  auto defect = [&](const GaugeCurrent& x, const GaugeField& a) {
    return eval_dualcurrent_on_field(mu_map(x, mu), a).raw -
           integrate(a, dz).raw;
  };

  // flat corrections act through <lambda, top ~ m>; precompute the pairing
  // matrix of the free flat directions against the free probes
  auto& fq = hom.cohomology(qq);
  std::vector<Cochain> flat_gens;
  for (const auto& g : fq.free_generators())
    flat_gens.push_back(hom.vector_cochain(qq, g));
  std::vector<Chain> probe_caps;
  for (std::size_t j = 0; j < free_count; ++j)
    probe_caps.push_back(cap_back(probes[j].top, mu.m));
  Rat sigma(pow_sign(qq) * dimension_sign(n));

  // the torsion part of the lifted top cocycle is not pinned by the ladder;
  // enumerate the finite group of candidate shifts
  auto& tq = hom.cohomology(qq + 1);
  const auto& orders = tq.torsion_orders();
  std::vector<Int> tau(orders.size(), 0);
  long variants = 1;
  for (const Int& o : orders) variants *= o.get_si();
  if (variants > 256)
    throw PreconditionError("torsion search space too large");

  for (long it = 0; it < variants; ++it) {
    GaugeCurrent cand = base;
    if (!tau.empty()) {
      Cochain vt;
      vt.d = qq + 1;
      Int omul(1);
      for (std::size_t l = 0; l < orders.size(); ++l) {
        if (tau[l] != 0)
          vt = vt + Rat(tau[l]) * hom.vector_cochain(qq + 1, tq.torsion_generators()[l]);
        omul *= orders[l];
      }
      if (!vt.is_zero()) {
        auto beta = hom.solve_coboundary(qq, Rat(omul) * vt);
        if (!beta) throw std::logic_error("torsion multiple must bound");
        Cochain lt = Rat(1, omul) * *beta;
        cand.layers[qq] =
            cand.layers[qq] - fundamental_multiples_layer(cover, lt);
        cand.top = cand.top - vt;
      }
    }
    // free correction: solve the pairing system so the free-probe defects
    // cancel exactly
    bool ok = true;
    if (!flat_gens.empty() || free_count > 0) {
      if (flat_gens.size() != free_count) {
        ok = false;  // rank mismatch: duality failed, no correction exists
      } else if (free_count > 0) {
        std::vector<std::vector<Rat>> h(free_count,
                                        std::vector<Rat>(free_count));
        std::vector<Rat> d(free_count);
        for (std::size_t j = 0; j < free_count; ++j) {
          for (std::size_t k = 0; k < free_count; ++k)
            h[j][k] = pairing(flat_gens[k], probe_caps[j]);
          d[j] = sigma * defect(cand, probes[j]);
        }
        QSolver solver(h);
        auto yv = solver.solve(d);
        if (!yv) {
          ok = false;
        } else {
          Cochain lf;
          lf.d = qq;
          for (std::size_t k = 0; k < free_count; ++k)
            lf = lf + (*yv)[k] * flat_gens[k];
          if (!lf.is_zero())
            cand.layers[qq] =
                cand.layers[qq] - fundamental_multiples_layer(cover, lf);
        }
      }
    }
    if (ok) {
      for (const GaugeField& a : probes)
        if (!is_integer(defect(cand, a))) {
          ok = false;
          break;
        }
    }
    if (ok) return cand;
    // next torsion tuple
    for (std::size_t l = 0; l < tau.size(); ++l) {
      tau[l] += 1;
      if (tau[l] < orders[l]) break;
      tau[l] = 0;
    }
  }
  throw PreconditionError("no canonical current reproduces the holonomies");
}

GaugeCurrent canonical_current_of_cycle(const StarCover& cover,
                                        ComplexHomology& hom, const Chain& z) {
  return canonical_current_of_cycle(cover, hom, z, partition_layers(cover));
}

}  // namespace dbcalc
