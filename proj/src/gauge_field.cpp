#include "dbcalc/gauge_field.hpp"

#include <stdexcept>
#include <utility>

#include "dbcalc/chains.hpp"
#include "dbcalc/cycles.hpp"

namespace dbcalc {

namespace {

bool well_formed(const GaugeField& a) {
  if (a.p < -1) return false;
  int want = a.p < 0 ? 0 : a.p + 1;
  if (static_cast<int>(a.layers.size()) != want) return false;
  for (int k = 0; k <= a.p; ++k) {
    const FormLayer& lay = a.layers[static_cast<std::size_t>(k)];
    if (lay.cech_degree != k || lay.de_rham_degree != a.p - k) return false;
  }
  return a.top.d == a.p + 1 && is_integral(a.top);
}

void require_shape(const GaugeTransformation& t) {
  if (t.p < 0) throw PreconditionError("gauge transformation: p must be >= 0");
  if (static_cast<int>(t.gens.size()) != t.p)
    throw PreconditionError("gauge transformation: wrong generator count");
  for (int k = 0; k < t.p; ++k) {
    const FormLayer& gen = t.gens[static_cast<std::size_t>(k)];
    if (gen.cech_degree != k || gen.de_rham_degree != t.p - 1 - k)
      throw PreconditionError("gauge transformation: generator degree mismatch");
  }
  if (t.g.d != t.p || !is_integral(t.g))
    throw PreconditionError("gauge transformation: g must be an integer p-cochain");
}

int star_vertex_count(const StarCover& cover, const Simplex& carrier) {
  int m = 0;
  for (const Simplex& s : cover.closed_star(carrier))
    if (dim(s) == 0) ++m;
  return m;
}

}  // namespace

GaugeField GaugeField::zero(int p) {
  GaugeField a;
  a.p = p;
  for (int k = 0; k <= p; ++k) a.layers.emplace_back(k, p - k);
  a.top.d = p + 1;
  return a;
}

GaugeField operator+(const GaugeField& x, const GaugeField& y) {
  if (x.p != y.p) throw PreconditionError("gauge field degree mismatch");
  GaugeField r = x;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] + y.layers[k];
  r.top = x.top + y.top;
  return r;
}

GaugeField operator-(const GaugeField& x, const GaugeField& y) {
  return x + Rat(-1) * y;
}

GaugeField operator*(const Rat& q, const GaugeField& x) {
  GaugeField r = x;
  for (auto& lay : r.layers) lay = q * lay;
  r.top = q * x.top;
  return r;
}

bool operator==(const GaugeField& x, const GaugeField& y) {
  return x.p == y.p && x.layers == y.layers && x.top == y.top;
}

GaugeTransformation GaugeTransformation::zero(int p) {
  GaugeTransformation t;
  t.p = p;
  for (int k = 0; k < p; ++k) t.gens.emplace_back(k, p - 1 - k);
  t.g.d = p;
  return t;
}

GaugeTransformation operator+(const GaugeTransformation& x,
                              const GaugeTransformation& y) {
  if (x.p != y.p) throw PreconditionError("gauge transformation degree mismatch");
  GaugeTransformation r = x;
  for (std::size_t k = 0; k < r.gens.size(); ++k)
    r.gens[k] = r.gens[k] + y.gens[k];
  r.g = x.g + y.g;
  return r;
}

bool check_descent(const StarCover& cover, const GaugeField& a) {
  if (!well_formed(a)) return false;
  if (a.p == -1) return coboundary(cover.complex(), a.top).is_zero();
  for (int k = 0; k < a.p; ++k) {
    FormLayer lhs = cech_delta(cover, a.layers[static_cast<std::size_t>(k)],
                               StarSupport::closed);
    FormLayer rhs = layer_d(cover, a.layers[static_cast<std::size_t>(k) + 1],
                            StarSupport::closed);
    if (!(lhs == rhs)) return false;
  }
  FormLayer lhs = cech_delta(cover, a.layers[static_cast<std::size_t>(a.p)],
                             StarSupport::closed);
  return lhs == vertexwise_constant_layer(cover, a.top);
}

GaugeField transformation_field(const StarCover& cover,
                                const GaugeTransformation& t) {
  require_shape(t);
  GaugeField a = GaugeField::zero(t.p);
  int p = t.p;
  for (int k = 0; k < p; ++k) {
    std::size_t i = static_cast<std::size_t>(k);
    a.layers[i] = a.layers[i] + layer_d(cover, t.gens[i], StarSupport::closed);
    a.layers[i + 1] =
        a.layers[i + 1] + cech_delta(cover, t.gens[i], StarSupport::closed);
  }
  std::size_t top_layer = static_cast<std::size_t>(p);
  a.layers[top_layer] =
      a.layers[top_layer] + vertexwise_constant_layer(cover, t.g);
  a.top = coboundary(cover.complex(), t.g);
  return a;
}

GaugeField field_from_form(const StarCover& cover, const Cochain& chi) {
  GaugeField a = GaugeField::zero(chi.d);
  a.layers[0] = restriction_layer(cover, chi);
  return a;
}

GaugeField field_from_flat_class(const StarCover& cover,
                                 const FlatClassRep& rep) {
  if (rep.r.d != rep.p)
    throw PreconditionError("flat class: representative degree mismatch");
  Cochain top = coboundary(cover.complex(), rep.r);
  if (!is_integral(top))
    throw PreconditionError(
        "flat class: coboundary of the representative is not integral");
  GaugeField a = GaugeField::zero(rep.p);
  a.layers[static_cast<std::size_t>(rep.p)] =
      vertexwise_constant_layer(cover, rep.r);
  a.top = top;
  return a;
}

GaugeField field_from_curvature(const StarCover& cover, ComplexHomology& hom,
                                const Cochain& f, int p) {
  const SimplicialComplex& k = cover.complex();
  if (f.d != p + 1) throw PreconditionError("curvature degree mismatch");
  if (!coboundary(k, f).is_zero())
    throw PreconditionError("curvature is not closed");
  if (p == -1) {
    if (!is_integral(f))
      throw PreconditionError("degree -1 fields need an integer 0-cocycle");
    GaugeField a = GaugeField::zero(-1);
    a.top = f;
    return a;
  }
  if (f.d <= k.n() && !has_integral_periods(hom, f))
    throw PreconditionError("curvature has a non-integral period");

  GaugeField a = GaugeField::zero(p);
  FormLayer prev = restriction_layer(cover, f);
  for (int lvl = 0; lvl <= p; ++lvl) {
    FormLayer lay(lvl, p - lvl);
    for (const auto& [carrier, w] : prev.entries)
      lay.set(carrier, cone_contract(cover, carrier, w));
    a.layers[static_cast<std::size_t>(lvl)] = lay;
    prev = cech_delta(cover, lay, StarSupport::closed);
  }

  // The final level is constant on each closed star; its constants form a
  // rational cocycle whose class matches f under the descent isomorphism.
  Cochain atop;
  atop.d = p + 1;
  for (const auto& [tau, w] : prev.entries) {
    if (static_cast<int>(w.c.size()) != star_vertex_count(cover, tau))
      throw std::logic_error("curvature descent: non-constant final level");
    Rat v = w.c.begin()->second;
    for (const auto& [s, val] : w.c)
      if (val != v)
        throw std::logic_error("curvature descent: non-constant final level");
    atop.add(tau, v);
  }

  if (is_integral(atop)) {
    a.top = atop;
    return a;
  }
  auto split = integral_cocycle_split(hom, atop);
  if (!split)
    throw PreconditionError("curvature has a non-integral period");
  a.top = split->u;
  std::size_t top_layer = static_cast<std::size_t>(p);
  a.layers[top_layer] =
      a.layers[top_layer] - vertexwise_constant_layer(cover, split->beta);
  return a;
}

Cochain curvature(const StarCover& cover, const GaugeField& a) {
  Cochain f;
  f.d = a.p + 1;
  if (a.p == -1) {
    f.d = 0;
    return f;
  }
  FormLayer df = layer_d(cover, a.layers[0], StarSupport::closed);
  for (const Simplex& s : cover.complex().simplices(a.p + 1)) {
    Rat v = df.at(Simplex{s.front()}).at(s);
    for (Vertex w : s)
      if (df.at(Simplex{w}).at(s) != v)
        throw std::logic_error("curvature: star values do not glue");
    if (v != 0) f.add(s, v);
  }
  return f;
}

QuotientPresentation::Coords class_of(ComplexHomology& hom,
                                      const GaugeField& a) {
  if (a.p + 1 > hom.complex().n()) return QuotientPresentation::Coords{};
  QuotientPresentation& q = hom.cohomology(a.p + 1);
  return q.coords(hom.cochain_vector(a.top));
}

std::optional<CocycleSplit> integral_cocycle_split(ComplexHomology& hom,
                                                   const Cochain& x) {
  const SimplicialComplex& k = hom.complex();
  int d = x.d;
  if (d < 0 || d > k.n()) return std::nullopt;
  if (!coboundary(k, x).is_zero()) return std::nullopt;

  Int den = 1;
  for (const auto& [s, v] : x.c)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  Cochain y = Rat(den) * x;

  QuotientPresentation& q = hom.cohomology(d);
  auto co = q.coords(hom.cochain_vector(y));
  CocycleSplit out;
  out.u.d = d;
  for (std::size_t i = 0; i < co.free.size(); ++i) {
    if (co.free[i] % den != 0) return std::nullopt;
    Int li = co.free[i] / den;
    if (li != 0)
      out.u = out.u + Rat(li) * hom.vector_cochain(d, q.free_generators()[i]);
  }
  if (d == 0) {
    if (!(x - out.u).is_zero()) return std::nullopt;
    out.beta.d = -1;
    return out;
  }
  auto beta = hom.solve_coboundary(d - 1, x - out.u);
  if (!beta) return std::nullopt;
  out.beta = *beta;
  return out;
}

EquivalenceResult gauge_equivalent(const StarCover& cover, ComplexHomology& hom,
                                   const GaugeField& a, const GaugeField& b) {
  if (a.p != b.p) throw PreconditionError("gauge equivalence: degree mismatch");
  int p = a.p;
  if (p == -1) return {a.top == b.top, std::nullopt};

  GaugeField delta = b - a;
  if (!curvature(cover, delta).is_zero()) return {};
  if (!class_of(hom, delta).is_zero()) return {};
  QuotientPresentation& hq = hom.homology(p);
  auto vanishes = [&](const std::vector<Int>& gen) {
    return holonomy(cover, delta, hom.vector_chain(p, gen)) == RmodZ();
  };
  for (const auto& gen : hq.free_generators())
    if (!vanishes(gen)) return {};
  for (const auto& gen : hq.torsion_generators())
    if (!vanishes(gen)) return {};

  // Clear the difference one Cech level at a time, recording generators.
  GaugeTransformation w = GaugeTransformation::zero(p);
  if (!delta.top.is_zero()) {
    auto primitive =
        hom.cohomology(p + 1).preimage(hom.cochain_vector(delta.top));
    if (!primitive)
      throw std::logic_error("gauge equivalence: top cocycle has no primitive");
    w.g = w.g + hom.vector_cochain(p, *primitive);
  }
  for (int k = p; k >= 1; --k) {
    // the residual above level k is zero, so level k is delta-closed and the
    // splitting homotopy provides an exact primitive
    GaugeField r = delta - transformation_field(cover, w);
    std::size_t i = static_cast<std::size_t>(k - 1);
    w.gens[i] = w.gens[i] + h_delta(r.layers[static_cast<std::size_t>(k)], false);
  }

  GaugeField r = delta - transformation_field(cover, w);
  Cochain chi = glue_layer(r.layers[0], false);
  if (!(restriction_layer(cover, chi) == r.layers[0]))
    throw std::logic_error("gauge equivalence: residual layer is not global");
  auto split = integral_cocycle_split(hom, chi);
  if (!split)
    throw std::logic_error("gauge equivalence: residual form fails to split");
  if (p == 0) {
    w.g = w.g + split->u;
  } else {
    w.gens[0] = w.gens[0] + restriction_layer(cover, split->beta);
    if (!split->u.is_zero()) {
      // cone staircase expressing an integer closed global form as a
      // transformation; every level stays integral
      FormLayer cur = restriction_layer(cover, split->u);
      for (int k = 0; k < p; ++k) {
        FormLayer s(k, p - 1 - k);
        for (const auto& [carrier, v] : cur.entries)
          s.set(carrier, cone_contract(cover, carrier, v));
        std::size_t i = static_cast<std::size_t>(k);
        w.gens[i] = w.gens[i] + s;
        cur = Rat(-1) * cech_delta(cover, s, StarSupport::closed);
      }
      Cochain gu;
      gu.d = p;
      for (const auto& [carrier, v] : cur.entries) {
        if (static_cast<int>(v.c.size()) != star_vertex_count(cover, carrier))
          throw std::logic_error("gauge equivalence: staircase is not constant");
        Rat c0 = v.c.begin()->second;
        for (const auto& [s2, val] : v.c)
          if (val != c0)
            throw std::logic_error("gauge equivalence: staircase is not constant");
        gu.add(carrier, c0);
      }
      if (!is_integral(gu))
        throw std::logic_error("gauge equivalence: staircase left fractions");
      w.g = w.g + gu;
    }
  }

  if (!(transformation_field(cover, w) == delta))
    throw std::logic_error("gauge equivalence: witness verification failed");
  return {true, w};
}

}  // namespace dbcalc
