#include "dbcalc/db_product.hpp"

#include <map>
#include <stdexcept>

namespace dbcalc {

namespace {

int pow_sign(int e) { return e % 2 != 0 ? -1 : 1; }

// Curvature entry of the left factor over a vertex, shared by every carrier
// whose last vertex it is.
std::map<Simplex, Cochain> vertex_curvatures(const StarCover& cover,
                                             const GaugeField& a) {
  std::map<Simplex, Cochain> f;
  for (const Simplex& v : cover.complex().simplices(0))
    f[v] = cover.star_coboundary(v, a.layers[0].at(v));
  return f;
}

}  // namespace

GaugeCurrent top_current(const StarCover& cover,
                         const TopCurrentCanonical& t) {
  int n = cover.complex().n();
  if (t.r.d != n)
    throw PreconditionError("canonical density must have top degree");
  GaugeCurrent c = GaugeCurrent::zero(-1, n);
  c.layers[n] =
      Rat(dimension_sign(n)) * fundamental_multiples_layer(cover, t.r);
  return c;
}

GaugeField db_product(const StarCover& cover, const GaugeField& b,
                      const GaugeField& a) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int q = b.p;
  int p = a.p;
  int m = p + q + 1;
  if (q < 0 || p < 0) throw PreconditionError("product needs field degrees >= 0");
  if (m > n) throw PreconditionError("product degree exceeds the dimension");
  GaugeField out = GaugeField::zero(m, n);
  std::map<Simplex, Cochain> da = vertex_curvatures(cover, a);

  // low carriers: left layers against the right curvature at the last vertex
  for (int k = 0; k <= q; ++k)
    for (const auto& [s, bs] : b.layers[k].entries) {
      const Cochain& f = da[Simplex{s.back()}];
      Cochain val = cover.restrict_closed(s, cup(kx, bs, f));
      if (!val.is_zero()) out.layers[k].add(s, val);
    }

  // high carriers: the left top cocycle on the front face scales the right
  // layer at the back face
  for (int k = q + 1; k <= m; ++k) {
    int l = k - q - 1;
    Rat eps(pow_sign((q + 1) * l));
    for (const Simplex& s : kx.simplices(k)) {
      Rat bf = b.top.at(front_face(s, q + 1));
      if (bf == 0) continue;
      const Cochain& av = a.layers[l].at(back_face(s, l));
      if (av.is_zero()) continue;
      Cochain val = cover.restrict_closed(s, (eps * bf) * av);
      if (!val.is_zero()) out.layers[k].add(s, val);
    }
  }
  out.top = Rat(pow_sign((q + 1) * (p + 1))) * cup(kx, b.top, a.top);
  return out;
}

int epsilon_sign(int p, int n) {
  if (p < 0 || p > n - 1) throw PreconditionError("degree out of range");
  return pow_sign((p + 1) * (n - p));
}

RmodZ bf_action(const StarCover& cover, ComplexHomology& hom,
                const GaugeField& b, const GaugeField& a, const Rat& k) {
  int n = cover.complex().n();
  if (!is_integer(k))
    throw PreconditionError("coupling constant must be an integer");
  if (b.p + a.p + 1 != n)
    throw PreconditionError("action needs complementary field degrees");
  GaugeField prod = db_product(cover, b, a);
  CycleDecomposition dm = decompose_cycle(cover, hom.fundamental_cycle());
  return RmodZ(k * integrate(prod, dm).raw);
}

DualGaugeField db_cap(const StarCover& cover, const GaugeField& a,
                      const PartitionLayers& mu) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int p = a.p;
  if (p < 0 || p > n - 1) throw PreconditionError("field degree out of range");
  int qq = n - p - 1;
  DualGaugeField out = DualGaugeField::zero(p, n);
  std::map<Simplex, Cochain> da = vertex_curvatures(cover, a);

  for (int k = 0; k <= qq; ++k)
    for (const Simplex& s : kx.simplices(k)) {
      const Cochain& me = mu.mu[k].at(s);
      if (me.is_zero()) continue;
      Cochain val = cup(kx, da[Simplex{s.back()}], me);
      if (!val.is_zero()) out.layers[k].add(s, val);
    }

  // correction hanging off the one-past-the-end carriers restores the final
  // descent rung
  FormLayer qfix(qq + 1, n);
  for (int l = 0; l <= p; ++l) {
    Rat cl(pow_sign(p * l));
    for (const Simplex& s : kx.simplices(qq + 1 + l)) {
      const Cochain& me = mu.mu[static_cast<std::size_t>(qq + 1 + l)].at(s);
      if (me.is_zero()) continue;
      const Cochain& av = a.layers[l].at(back_face(s, l));
      if (av.is_zero()) continue;
      Cochain val = cup(kx, av, me);
      if (!val.is_zero()) qfix.add(front_face(s, qq + 1), cl * val);
    }
  }
  out.layers[qq] = out.layers[qq] + hat_partial(qfix);
  out.bottom = cap_back(a.top, mu.m);
  return out;
}

GaugeCurrent extended_db_product(const StarCover& cover, const GaugeCurrent& b,
                                 const GaugeField& a) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  int p = a.p;
  if (b.q != p) throw PreconditionError("extended product needs matching labels");
  if (p < 0 || p > n - 1) throw PreconditionError("field degree out of range");
  int qq = n - p - 1;
  GaugeCurrent out = GaugeCurrent::zero(-1, n);
  Chain z = oriented_top_chain(kx);
  std::map<Simplex, Cochain> da = vertex_curvatures(cover, a);

  for (int k = 0; k <= qq; ++k)
    for (const auto& [s, bs] : b.layers[k].entries) {
      Chain val = cover.restrict_open(s, cap_front(da[Simplex{s.back()}], bs));
      if (!val.is_zero()) out.layers[k].add(s, val);
    }

  for (int k = qq + 1; k <= n; ++k) {
    int l = k - qq - 1;
    Rat xi(pow_sign(n + 1 + (p + 1) * l));
    for (const Simplex& s : kx.simplices(k)) {
      Rat bf = b.top.at(front_face(s, qq + 1));
      if (bf == 0) continue;
      const Cochain& av = a.layers[l].at(back_face(s, l));
      if (av.is_zero()) continue;
      Chain val = cover.restrict_open(s, cap_front(av, z));
      if (!val.is_zero()) out.layers[k].add(s, (xi * bf) * val);
    }
  }
  return out;
}

TopCurrentCanonical reduce_top_current(const StarCover& cover,
                                       const GaugeCurrent& c) {
  const SimplicialComplex& kx = cover.complex();
  int n = kx.n();
  if (c.q != -1 || static_cast<int>(c.layers.size()) != n + 1)
    throw PreconditionError("reduction expects a degree -1 current");
  GaugeCurrent w = c;
  // peel the lower layers with transformations carrying no integer part, so
  // the raw evaluations are untouched
  for (int k = 0; k < n; ++k) {
    ChainLayer gen(k, k + 1);
    for (const auto& [s, x] : w.layers[k].entries) {
      auto y = cover.solve_star_boundary(s, k + 1, x);
      if (!y) throw std::logic_error("reduction solve failed on a valid current");
      if (!y->is_zero()) gen.set(s, *y);
    }
    w.layers[k] = w.layers[k] - layer_boundary(cover, gen, StarSupport::open);
    w.layers[k + 1] = w.layers[k + 1] - hat_delta(cover, gen, StarSupport::open);
    if (!w.layers[k].is_zero())
      throw std::logic_error("reduction left residue below the top layer");
  }
  TopCurrentCanonical t;
  t.r.d = n;
  int sn = dimension_sign(n);
  for (const Simplex& s : kx.simplices(n)) {
    Chain e = w.layers[n].at(s);
    if (e.is_zero()) continue;
    const Chain& zs = cover.fundamental_in_star(s);
    Rat lam = e.c.begin()->second / zs.at(e.c.begin()->first);
    if (!(e == lam * zs))
      throw std::logic_error("top layer entry is not a star multiple");
    t.r.add(s, Rat(sn) * lam);
  }
  return t;
}

QuantumIntegral eval_on_unit(const StarCover& cover, const GaugeCurrent& c,
                             const PartitionLayers& mu) {
  int n = cover.complex().n();
  if (c.q != -1 || static_cast<int>(c.layers.size()) != n + 1)
    throw PreconditionError("unit evaluation expects a degree -1 current");
  Rat raw(0);
  for (int k = 0; k <= n; ++k) {
    Rat term = pairing(mu.mu[k], c.layers[k]);
    raw += (k % 2 != 0) ? -term : term;
  }
  return {raw};
}

}  // namespace dbcalc
