#include "dbcalc/random_objects.hpp"

#include "dbcalc/chains.hpp"

namespace dbcalc {

Cochain random_rational_cochain(const SimplicialComplex& k, int d, Rng& rng,
                                int terms) {
  Cochain w;
  w.d = d;
  const auto& simplices = k.simplices(d);
  if (simplices.empty()) return w;
  for (int i = 0; i < terms; ++i)
    w.add(simplices[rng.below(simplices.size())], rng.rat());
  return w;
}

Chain random_integer_chain(const SimplicialComplex& k, int d, Rng& rng,
                           int terms) {
  Chain c;
  c.d = d;
  const auto& simplices = k.simplices(d);
  if (simplices.empty()) return c;
  for (int i = 0; i < terms; ++i)
    c.add(simplices[rng.below(simplices.size())], Rat(rng.integer()));
  return c;
}

Cochain random_integer_cochain(const SimplicialComplex& k, int d, Rng& rng,
                               int terms) {
  Cochain w;
  w.d = d;
  const auto& simplices = k.simplices(d);
  if (simplices.empty()) return w;
  for (int i = 0; i < terms; ++i)
    w.add(simplices[rng.below(simplices.size())], Rat(rng.integer()));
  return w;
}

Chain random_integer_cycle(ComplexHomology& hom, int d, Rng& rng) {
  const SimplicialComplex& k = hom.complex();
  Chain z;
  z.d = d;
  QuotientPresentation& q = hom.homology(d);
  for (const auto& gen : q.free_generators())
    z = z + Rat(rng.integer(2)) * hom.vector_chain(d, gen);
  for (const auto& gen : q.torsion_generators())
    z = z + Rat(rng.integer(2)) * hom.vector_chain(d, gen);
  if (d < k.n())
    z = z + boundary(random_integer_chain(k, d + 1, rng));
  return z;
}

GaugeTransformation random_gauge_transformation(const StarCover& cover, int p,
                                                Rng& rng) {
  const SimplicialComplex& k = cover.complex();
  GaugeTransformation t = GaugeTransformation::zero(p);
  for (int lvl = 0; lvl < p; ++lvl) {
    const auto& carriers = k.simplices(lvl);
    if (carriers.empty()) continue;
    FormLayer& gen = t.gens[static_cast<std::size_t>(lvl)];
    for (int i = 0; i < 3; ++i) {
      const Simplex& carrier = carriers[rng.below(carriers.size())];
      Cochain w;
      w.d = p - 1 - lvl;
      std::vector<Simplex> support;
      for (const Simplex& s : cover.closed_star(carrier))
        if (dim(s) == w.d) support.push_back(s);
      if (support.empty()) continue;
      for (int j = 0; j < 3; ++j)
        w.add(support[rng.below(support.size())], rng.rat());
      gen.add(carrier, w);
    }
  }
  const auto& top_carriers = k.simplices(p);
  if (!top_carriers.empty())
    for (int i = 0; i < 4; ++i)
      t.g.add(top_carriers[rng.below(top_carriers.size())],
              Rat(rng.integer()));
  return t;
}

GaugeField random_gauge_field(const StarCover& cover, ComplexHomology& hom,
                              int p, Rng& rng) {
  const SimplicialComplex& k = cover.complex();
  GaugeField a = field_from_form(cover, random_rational_cochain(k, p, rng));

  if (p + 1 <= k.n()) {
    // integer cocycle: coboundary plus a generator combination
    Cochain gint;
    gint.d = p;
    const auto& ps = k.simplices(p);
    if (!ps.empty())
      for (int i = 0; i < 3; ++i)
        gint.add(ps[rng.below(ps.size())], Rat(rng.integer()));
    Cochain f = coboundary(k, gint);
    QuotientPresentation& q = hom.cohomology(p + 1);
    for (const auto& gen : q.free_generators())
      f = f + Rat(rng.integer(1)) * hom.vector_cochain(p + 1, gen);
    a = a + field_from_curvature(cover, hom, f, p);

    // flat torsion holonomy: r with an integral, torsion-class coboundary
    Cochain r;
    r.d = p;
    const auto& orders = q.torsion_orders();
    for (std::size_t j = 0; j < orders.size(); ++j) {
      std::vector<Int> rhs = q.torsion_generators()[j];
      for (auto& v : rhs) v *= orders[j];
      auto lift = q.preimage(rhs);
      if (!lift) continue;
      Rat scale(rng.integer(), orders[j]);
      scale.canonicalize();
      r = r + scale * hom.vector_cochain(p, *lift);
    }
    // flat free holonomy: random rational multiples of closed generators
    for (const auto& gen : hom.cohomology(p).free_generators())
      r = r + rng.rat(3, 5) * hom.vector_cochain(p, gen);
    a = a + field_from_flat_class(cover, FlatClassRep(p, r));
  }

  a = a + transformation_field(cover, random_gauge_transformation(cover, p, rng));
  return a;
}

}  // namespace dbcalc
