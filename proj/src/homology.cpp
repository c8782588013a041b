#include "dbcalc/homology.hpp"

namespace dbcalc {

bool QuotientPresentation::Coords::is_zero() const {
  for (const Int& x : free)
    if (x != 0) return false;
  for (const Int& x : torsion)
    if (x != 0) return false;
  return true;
}

QuotientPresentation::QuotientPresentation(const Snf& sbout, const ZMat& bin)
    : n_(sbout.v.rows), kv_(sbout.v), kvinv_(sbout.vinv), krank_(sbout.rank) {
  if (bin.rows != n_) throw PreconditionError("presentation shape mismatch");
  kdim_ = n_ - krank_;

  // Express the columns of bin in the kernel basis. The columns are sparse,
  // so accumulate scaled columns of the inverse transform.
  ZMat x(kdim_, bin.cols);
  for (int c = 0; c < bin.cols; ++c) {
    std::vector<Int> w(static_cast<std::size_t>(n_));
    for (int r = 0; r < n_; ++r) {
      const Int& e = bin.at(r, c);
      if (e == 0) continue;
      for (int i = 0; i < n_; ++i)
        if (kvinv_.at(i, r) != 0) w[static_cast<std::size_t>(i)] += kvinv_.at(i, r) * e;
    }
    for (int i = 0; i < krank_; ++i)
      if (w[static_cast<std::size_t>(i)] != 0)
        throw PreconditionError("bin does not map into the kernel of bout");
    for (int i = 0; i < kdim_; ++i)
      x.at(i, c) = w[static_cast<std::size_t>(krank_ + i)];
  }
  sx_ = smith_normal_form(x);

  // Quotient generators: inverse row transform applied to the diagonal basis,
  // expanded back to the ambient space through the kernel basis.
  auto ambient_gen = [&](int row) {
    std::vector<Int> g(static_cast<std::size_t>(n_));
    for (int j = 0; j < kdim_; ++j) {
      const Int& cj = sx_.uinv.at(j, row);
      if (cj == 0) continue;
      for (int i = 0; i < n_; ++i)
        if (kv_.at(i, krank_ + j) != 0)
          g[static_cast<std::size_t>(i)] += cj * kv_.at(i, krank_ + j);
    }
    return g;
  };
  for (int i = 0; i < sx_.rank; ++i)
    if (sx_.diag(i) > 1) {
      torsion_orders_.push_back(sx_.diag(i));
      torsion_rows_.push_back(i);
      torsion_gens_.push_back(ambient_gen(i));
    }
  for (int i = sx_.rank; i < kdim_; ++i) free_gens_.push_back(ambient_gen(i));
}

std::optional<std::vector<Int>> QuotientPresentation::kernel_coords(
    const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw PreconditionError("kernel coordinate size mismatch");
  std::vector<Int> w = mul(kvinv_, v);
  for (int i = 0; i < krank_; ++i)
    if (w[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return std::vector<Int>(w.begin() + krank_, w.end());
}

bool QuotientPresentation::is_cycle(const std::vector<Int>& v) const {
  return kernel_coords(v).has_value();
}

QuotientPresentation::Coords QuotientPresentation::coords(
    const std::vector<Int>& cycle) const {
  auto y = kernel_coords(cycle);
  if (!y) throw PreconditionError("coords of a non-cycle");
  std::vector<Int> w = mul(sx_.u, *y);
  Coords out;
  for (std::size_t i = 0; i < torsion_rows_.size(); ++i) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(),
               w[static_cast<std::size_t>(torsion_rows_[i])].get_mpz_t(),
               torsion_orders_[i].get_mpz_t());
    out.torsion.push_back(r);
  }
  for (int i = sx_.rank; i < static_cast<int>(w.size()); ++i)
    out.free.push_back(w[static_cast<std::size_t>(i)]);
  return out;
}

bool QuotientPresentation::is_zero_class(const std::vector<Int>& cycle) const {
  return coords(cycle).is_zero();
}

std::optional<std::vector<Int>> QuotientPresentation::preimage(
    const std::vector<Int>& cycle) const {
  auto y = kernel_coords(cycle);
  if (!y) throw PreconditionError("preimage of a non-cycle");
  return snf_solve(sx_, *y);
}

const ZMat& ComplexHomology::boundary_matrix(int d) {
  const int n = k_.n();
  if (d < 0 || d > n + 1) throw PreconditionError("boundary matrix degree out of range");
  if (bmat_.empty()) bmat_.resize(static_cast<std::size_t>(n) + 2);
  auto& slot = bmat_[static_cast<std::size_t>(d)];
  if (!slot) {
    const int rows = (d == 0) ? 0 : static_cast<int>(k_.simplices(d - 1).size());
    const int cols = (d > n) ? 0 : static_cast<int>(k_.simplices(d).size());
    ZMat m(rows, cols);
    if (d >= 1 && d <= n) {
      const auto& ss = k_.simplices(d);
      for (int c = 0; c < cols; ++c) {
        const Simplex& s = ss[static_cast<std::size_t>(c)];
        for (int i = 0; i <= d; ++i)
          m.at(k_.index_of(face(s, i)), c) += (i % 2 == 0) ? 1 : -1;
      }
    }
    slot = std::move(m);
  }
  return *slot;
}

const Snf& ComplexHomology::boundary_snf(int d) {
  const int n = k_.n();
  if (d < 0 || d > n + 1) throw PreconditionError("boundary form degree out of range");
  if (bsnf_.empty()) bsnf_.resize(static_cast<std::size_t>(n) + 2);
  auto& slot = bsnf_[static_cast<std::size_t>(d)];
  if (!slot) slot = smith_normal_form(boundary_matrix(d));
  return *slot;
}

const Snf& ComplexHomology::coboundary_snf(int d) {
  const int n = k_.n();
  if (d < 0 || d > n) throw PreconditionError("coboundary form degree out of range");
  if (cosnf_.empty()) cosnf_.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = cosnf_[static_cast<std::size_t>(d)];
  if (!slot) slot = snf_transpose(boundary_snf(d + 1));
  return *slot;
}

QuotientPresentation& ComplexHomology::homology(int d) {
  const int n = k_.n();
  if (d < 0 || d > n) throw PreconditionError("homology degree out of range");
  if (hom_.empty()) hom_.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = hom_[static_cast<std::size_t>(d)];
  if (!slot)
    slot = std::make_unique<QuotientPresentation>(boundary_snf(d),
                                                  boundary_matrix(d + 1));
  return *slot;
}

QuotientPresentation& ComplexHomology::cohomology(int d) {
  const int n = k_.n();
  if (d < 0 || d > n) throw PreconditionError("cohomology degree out of range");
  if (coh_.empty()) coh_.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = coh_[static_cast<std::size_t>(d)];
  if (!slot)
    slot = std::make_unique<QuotientPresentation>(coboundary_snf(d),
                                                  transpose(boundary_matrix(d)));
  return *slot;
}

std::optional<Cochain> ComplexHomology::solve_coboundary(int d, const Cochain& rhs) {
  if (d < 0 || d >= k_.n())
    throw PreconditionError("coboundary solve degree out of range");
  if (rhs.d != d + 1 && !rhs.c.empty())
    throw PreconditionError("coboundary solve degree mismatch");
  Cochain r = rhs;
  r.d = d + 1;
  // delta on degree d is the transpose of the boundary map one higher.
  auto x = snf_solve_rational(coboundary_snf(d), cochain_qvector(r));
  if (!x) return std::nullopt;
  return qvector_cochain(d, *x);
}

std::optional<Chain> ComplexHomology::solve_boundary(int d, const Chain& rhs) {
  if (d < 1 || d > k_.n())
    throw PreconditionError("boundary solve degree out of range");
  if (rhs.d != d - 1 && !rhs.c.empty())
    throw PreconditionError("boundary solve degree mismatch");
  Chain r = rhs;
  r.d = d - 1;
  auto x = snf_solve_rational(boundary_snf(d), chain_qvector(r));
  if (!x) return std::nullopt;
  return qvector_chain(d, *x);
}

std::vector<Rat> ComplexHomology::chain_qvector(const Chain& c) const {
  std::vector<Rat> v(k_.simplices(c.d).size());
  for (const auto& [s, x] : c.c) v[static_cast<std::size_t>(k_.index_of(s))] = x;
  return v;
}

std::vector<Rat> ComplexHomology::cochain_qvector(const Cochain& c) const {
  std::vector<Rat> v(k_.simplices(c.d).size());
  for (const auto& [s, x] : c.c) v[static_cast<std::size_t>(k_.index_of(s))] = x;
  return v;
}

std::vector<Int> ComplexHomology::chain_vector(const Chain& c) const {
  std::vector<Int> v(k_.simplices(c.d).size());
  for (const auto& [s, x] : c.c) {
    if (!is_integer(x)) throw PreconditionError("chain is not integral");
    v[static_cast<std::size_t>(k_.index_of(s))] = x.get_num();
  }
  return v;
}

std::vector<Int> ComplexHomology::cochain_vector(const Cochain& c) const {
  std::vector<Int> v(k_.simplices(c.d).size());
  for (const auto& [s, x] : c.c) {
    if (!is_integer(x)) throw PreconditionError("cochain is not integral");
    v[static_cast<std::size_t>(k_.index_of(s))] = x.get_num();
  }
  return v;
}

Chain ComplexHomology::vector_chain(int d, const std::vector<Int>& v) const {
  Chain c;
  c.d = d;
  const auto& ss = k_.simplices(d);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) c.c[ss[i]] = Rat(v[i]);
  return c;
}

Cochain ComplexHomology::vector_cochain(int d, const std::vector<Int>& v) const {
  Cochain c;
  c.d = d;
  const auto& ss = k_.simplices(d);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) c.c[ss[i]] = Rat(v[i]);
  return c;
}

Chain ComplexHomology::qvector_chain(int d, const std::vector<Rat>& v) const {
  Chain c;
  c.d = d;
  const auto& ss = k_.simplices(d);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) c.c[ss[i]] = v[i];
  return c;
}

Cochain ComplexHomology::qvector_cochain(int d, const std::vector<Rat>& v) const {
  Cochain c;
  c.d = d;
  const auto& ss = k_.simplices(d);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) c.c[ss[i]] = v[i];
  return c;
}

Chain ComplexHomology::fundamental_cycle() const {
  Chain z;
  z.d = k_.n();
  for (const auto& [top, sgn] : k_.orientation()) z.c[top] = Rat(sgn);
  return z;
}

bool has_integral_periods(ComplexHomology& h, const Cochain& u) {
  if (!coboundary(h.complex(), u).is_zero())
    throw PreconditionError("period check needs a closed cochain");
  std::vector<Rat> uv = h.cochain_qvector(u);
  auto pairs_integrally = [&](const std::vector<Int>& gen) {
    Rat p(0);
    for (std::size_t i = 0; i < uv.size(); ++i)
      if (gen[i] != 0 && uv[i] != 0) p += uv[i] * Rat(gen[i]);
    return is_integer(p);
  };
  QuotientPresentation& hp = h.homology(u.d);
  for (const auto& g : hp.free_generators())
    if (!pairs_integrally(g)) return false;
  for (const auto& g : hp.torsion_generators())
    if (!pairs_integrally(g)) return false;
  return true;
}

std::string group_string(const QuotientPresentation& p) {
  std::vector<std::string> parts;
  if (p.betti() == 1)
    parts.push_back("Z");
  else if (p.betti() > 1)
    parts.push_back("Z^" + std::to_string(p.betti()));
  for (const Int& t : p.torsion_orders()) parts.push_back("Z_" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace dbcalc
