#include "dbcalc/cover.hpp"

#include <cassert>

namespace dbcalc {

const std::vector<Simplex>& StarCover::open_star(const Simplex& carrier) const {
  auto it = open_memo_.find(carrier);
  if (it == open_memo_.end())
    it = open_memo_.emplace(carrier, k_.open_star(carrier)).first;
  return it->second;
}

const std::vector<Simplex>& StarCover::closed_star(const Simplex& carrier) const {
  auto it = closed_memo_.find(carrier);
  if (it == closed_memo_.end())
    it = closed_memo_.emplace(carrier, k_.closed_star(carrier)).first;
  return it->second;
}

bool StarCover::in_open_star(const Simplex& carrier, const Simplex& s) const {
  return contains(s, carrier);
}

bool StarCover::in_closed_star(const Simplex& carrier, const Simplex& s) const {
  return k_.has(join(s, carrier));
}

Cochain StarCover::restrict_closed(const Simplex& carrier, const Cochain& x) const {
  Cochain r;
  r.d = x.d;
  for (const auto& [s, v] : x.c)
    if (in_closed_star(carrier, s)) r.c.emplace(s, v);
  return r;
}

Chain StarCover::restrict_closed(const Simplex& carrier, const Chain& c) const {
  Chain r;
  r.d = c.d;
  for (const auto& [s, v] : c.c)
    if (in_closed_star(carrier, s)) r.c.emplace(s, v);
  return r;
}

Cochain StarCover::restrict_open(const Simplex& carrier, const Cochain& x) const {
  Cochain r;
  r.d = x.d;
  for (const auto& [s, v] : x.c)
    if (contains(s, carrier)) r.c.emplace(s, v);
  return r;
}

Chain StarCover::restrict_open(const Simplex& carrier, const Chain& c) const {
  Chain r;
  r.d = c.d;
  for (const auto& [s, v] : c.c)
    if (contains(s, carrier)) r.c.emplace(s, v);
  return r;
}

const Chain& StarCover::fundamental_in_star(const Simplex& carrier) const {
  auto it = fundamental_memo_.find(carrier);
  if (it == fundamental_memo_.end()) {
    Chain z;
    z.d = k_.n();
    for (const Simplex& s : open_star(carrier))
      if (dim(s) == k_.n()) z.add(s, Rat(k_.orientation_of(s)));
    it = fundamental_memo_.emplace(carrier, std::move(z)).first;
  }
  return it->second;
}

Cochain StarCover::star_coboundary(const Simplex& carrier, const Cochain& x) const {
  return restrict_closed(carrier, coboundary(k_, x));
}

bool StarCover::is_star_closed(const Simplex& carrier, const Cochain& x) const {
  return star_coboundary(carrier, x).is_zero();
}

const StarCover::StarSystem& StarCover::system(const Simplex& carrier, int x_dim,
                                               int dir) const {
  auto& memo = dir > 0 ? up_memo_ : down_memo_;
  auto key = std::make_pair(carrier, x_dim);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<Simplex> dom, cod;
  for (const Simplex& s : open_star(carrier)) {
    if (dim(s) == x_dim) dom.push_back(s);
    if (dim(s) == x_dim + dir) cod.push_back(s);
  }
  std::map<Simplex, int> cod_index;
  for (int i = 0; i < static_cast<int>(cod.size()); ++i) cod_index.emplace(cod[i], i);

  std::vector<std::vector<Rat>> m(cod.size(), std::vector<Rat>(dom.size(), Rat(0)));
  for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
    if (dir > 0) {
      Cochain col = coboundary(k_, elementary_cochain(dom[j]));
      for (const auto& [s, v] : col.c) {
        auto ci = cod_index.find(s);
        if (ci != cod_index.end()) m[ci->second][j] = v;
      }
    } else {
      Chain col = boundary(elementary_chain(dom[j]));
      for (const auto& [s, v] : col.c) {
        auto ci = cod_index.find(s);  // projection: faces off the star drop out
        if (ci != cod_index.end()) m[ci->second][j] = v;
      }
    }
  }
  StarSystem sys(std::move(dom), std::move(cod), std::move(cod_index),
                 QSolver(std::move(m)));
  return memo.emplace(key, std::move(sys)).first->second;
}

std::optional<Cochain> StarCover::solve_compact_d(const Simplex& carrier,
                                                  int x_degree,
                                                  const Cochain& rhs) const {
  assert(rhs.d == x_degree + 1);
  const StarSystem& sys = system(carrier, x_degree, +1);
  std::vector<Rat> b(sys.cod.size(), Rat(0));
  for (const auto& [s, v] : rhs.c) {
    auto it = sys.cod_index.find(s);
    if (it == sys.cod_index.end()) return std::nullopt;
    b[static_cast<std::size_t>(it->second)] = v;
  }
  auto x = sys.solver.solve(b);
  if (!x) return std::nullopt;
  Cochain r;
  r.d = x_degree;
  // an empty codomain gives a zero-length solution: the zero cochain works
  for (std::size_t j = 0; j < x->size(); ++j)
    if ((*x)[j] != 0) r.c.emplace(sys.dom[j], (*x)[j]);
  return r;
}

std::optional<Chain> StarCover::solve_star_boundary(const Simplex& carrier,
                                                    int y_degree,
                                                    const Chain& rhs) const {
  assert(rhs.d == y_degree - 1);
  const StarSystem& sys = system(carrier, y_degree, -1);
  std::vector<Rat> b(sys.cod.size(), Rat(0));
  for (const auto& [s, v] : rhs.c) {
    auto it = sys.cod_index.find(s);
    if (it == sys.cod_index.end()) return std::nullopt;
    b[static_cast<std::size_t>(it->second)] = v;
  }
  auto y = sys.solver.solve(b);
  if (!y) return std::nullopt;
  Chain r;
  r.d = y_degree;
  for (std::size_t j = 0; j < y->size(); ++j)
    if ((*y)[j] != 0) r.c.emplace(sys.dom[j], (*y)[j]);
  return r;
}

Cochain cone_contract(const StarCover& cover, const Simplex& carrier,
                      const Cochain& c) {
  if (carrier.empty())
    throw PreconditionError("cone_contract: carrier must be a nonempty simplex");
  if (c.d < 0)
    throw PreconditionError("cone_contract: degree must be nonnegative");
  for (const auto& [s, v] : c.c)
    if (!cover.in_closed_star(carrier, s))
      throw PreconditionError("cone_contract: cochain not supported on the star");
  if (!cover.is_star_closed(carrier, c))
    throw PreconditionError("cone_contract: cochain is not closed on the star");

  Vertex apex = carrier.front();
  Cochain r;
  r.d = c.d - 1;
  for (const auto& [s, v] : c.c) {
    if (!has_vertex(s, apex)) continue;
    int pos = position(s, apex);
    r.add(face(s, pos), (pos % 2 == 0) ? v : -v);
  }
  return r;
}

}  // namespace dbcalc
