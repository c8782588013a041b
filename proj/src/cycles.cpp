#include "dbcalc/cycles.hpp"

#include "dbcalc/chains.hpp"

namespace dbcalc {

CycleDecomposition CycleDecomposition::zero(int p) {
  CycleDecomposition d;
  d.p = p;
  for (int k = 0; k <= p; ++k) d.layers.emplace_back(k, p - k);
  d.bottom.d = p;
  return d;
}

CycleDecomposition decompose_cycle(const StarCover& cover, const Chain& z,
                                   bool from_back) {
  if (!is_integral(z))
    throw PreconditionError("decompose_cycle: cycle must be integral");
  if (!boundary(z).is_zero())
    throw PreconditionError("decompose_cycle: not a cycle");
  int p = z.d;
  if (p < 0 || p > cover.complex().n())
    throw PreconditionError("decompose_cycle: degree out of range");

  CycleDecomposition out = CycleDecomposition::zero(p);
  for (const auto& [s, v] : z.c) {
    Chain e;
    e.d = p;
    e.add(s, v);
    out.layers[0].add(Simplex{from_back ? s.back() : s.front()}, e);
  }
  for (int k = 1; k <= p; ++k)
    out.layers[static_cast<std::size_t>(k)] = h_partial(
        cover,
        layer_boundary(cover, out.layers[static_cast<std::size_t>(k) - 1],
                       StarSupport::closed),
        from_back);
  out.bottom = augmentation_chain(out.layers[static_cast<std::size_t>(p)]);
  return out;
}

bool check_decomposition(const StarCover& cover, const CycleDecomposition& d,
                         const Chain& z) {
  if (d.p < 0 || static_cast<int>(d.layers.size()) != d.p + 1) return false;
  Chain total;
  total.d = d.p;
  for (int k = 0; k <= d.p; ++k) {
    const ChainLayer& lay = d.layers[static_cast<std::size_t>(k)];
    if (lay.cech_degree != k || lay.de_rham_degree != d.p - k) return false;
    for (const auto& [carrier, c] : lay.entries) {
      if (!is_integral(c)) return false;
      for (const auto& [s, v] : c.c)
        if (!cover.in_closed_star(carrier, s)) return false;
      if (k == 0) total = total + c;
    }
  }
  if (!(total == z)) return false;
  for (int k = 1; k <= d.p; ++k) {
    ChainLayer lhs = cech_partial(d.layers[static_cast<std::size_t>(k)]);
    ChainLayer rhs = layer_boundary(
        cover, d.layers[static_cast<std::size_t>(k) - 1], StarSupport::closed);
    if (!(lhs == rhs)) return false;
  }
  if (!(d.bottom == augmentation_chain(d.layers[static_cast<std::size_t>(d.p)])))
    return false;
  return boundary(d.bottom).is_zero();
}

QuantumIntegral integrate(const GaugeField& a, const CycleDecomposition& d) {
  if (a.p != d.p) throw PreconditionError("integrate: degree mismatch");
  Rat raw = 0;
  for (int k = 0; k <= d.p; ++k) {
    Rat term = pairing(a.layers[static_cast<std::size_t>(k)],
                       d.layers[static_cast<std::size_t>(k)]);
    raw += k % 2 == 0 ? term : -term;
  }
  return QuantumIntegral{raw};
}

RmodZ holonomy(const StarCover& cover, const GaugeField& a, const Chain& z) {
  return integrate(a, decompose_cycle(cover, z)).value();
}

}  // namespace dbcalc
