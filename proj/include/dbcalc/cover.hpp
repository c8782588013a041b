#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dbcalc/chains.hpp"
#include "dbcalc/complex.hpp"
#include "dbcalc/linalg.hpp"

namespace dbcalc {

/// Star bookkeeping for a complex: membership tests, restrictions of chains
/// and cochains to a star, the oriented top-chain of a star, and cached
/// rational solvers for the per-star differential systems.
///
/// Owns its copy of the complex so cached data can never dangle.
class StarCover {
 public:
  explicit StarCover(SimplicialComplex k) : k_(std::move(k)) {}
  StarCover(const StarCover&) = delete;

  const SimplicialComplex& complex() const { return k_; }

  /// Simplices containing the carrier (sorted list, memoized).
  const std::vector<Simplex>& open_star(const Simplex& carrier) const;
  /// Faces of simplices containing the carrier (sorted list, memoized).
  const std::vector<Simplex>& closed_star(const Simplex& carrier) const;

  bool in_open_star(const Simplex& carrier, const Simplex& s) const;
  bool in_closed_star(const Simplex& carrier, const Simplex& s) const;

  /// Keep the entries lying in the closed star of the carrier.
  Cochain restrict_closed(const Simplex& carrier, const Cochain& x) const;
  Chain restrict_closed(const Simplex& carrier, const Chain& c) const;
  /// Keep the entries whose simplex contains the carrier.
  Cochain restrict_open(const Simplex& carrier, const Cochain& x) const;
  Chain restrict_open(const Simplex& carrier, const Chain& c) const;

  /// Oriented sum of the top simplices containing the carrier: the part of
  /// the fundamental cycle carried by the open star.
  const Chain& fundamental_in_star(const Simplex& carrier) const;

  /// Coboundary taken inside the closed star of the carrier, that is the
  /// ambient coboundary with entries outside the star cut off.
  Cochain star_coboundary(const Simplex& carrier, const Cochain& x) const;
  bool is_star_closed(const Simplex& carrier, const Cochain& x) const;

  /// Some cochain x supported on the open star with (coboundary x) = rhs,
  /// empty when no such x exists. rhs must be supported on the open star.
  std::optional<Cochain> solve_compact_d(const Simplex& carrier, int x_degree,
                                         const Cochain& rhs) const;

  /// Some chain y supported on the open star whose boundary, projected back
  /// to the open star, equals rhs; empty when no such y exists.
  std::optional<Chain> solve_star_boundary(const Simplex& carrier, int y_degree,
                                           const Chain& rhs) const;

 private:
  struct StarSystem {
    std::vector<Simplex> dom, cod;       // open-star simplices, two dimensions
    std::map<Simplex, int> cod_index;
    QSolver solver;
    StarSystem(std::vector<Simplex> d, std::vector<Simplex> c,
               std::map<Simplex, int> ci, QSolver s)
        : dom(std::move(d)), cod(std::move(c)), cod_index(std::move(ci)),
          solver(std::move(s)) {}
  };

  /// Linear system of the map sending open-star objects of dimension
  /// x_dim to dimension x_dim + dir (dir = +1: coboundary, -1: projected
  /// boundary), memoized per (carrier, dimension).
  const StarSystem& system(const Simplex& carrier, int x_dim, int dir) const;

  SimplicialComplex k_;
  mutable std::map<Simplex, std::vector<Simplex>> open_memo_, closed_memo_;
  mutable std::map<Simplex, Chain> fundamental_memo_;
  mutable std::map<std::pair<Simplex, int>, StarSystem> up_memo_, down_memo_;
};

/// Primitive of a closed cochain on a closed star, which is a cone with apex
/// the carrier's least vertex.  For degree r >= 1 the result has degree r-1
/// and its star coboundary is the input; for r = 0 the input is constant on
/// the star and the result carries that constant on the empty simplex.
/// Throws PreconditionError when the input is not closed inside the star.
Cochain cone_contract(const StarCover& cover, const Simplex& carrier,
                      const Cochain& c);

}  // namespace dbcalc
