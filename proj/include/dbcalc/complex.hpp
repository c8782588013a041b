#pragma once

#include <map>
#include <string>
#include <vector>

#include "dbcalc/simplex.hpp"

namespace dbcalc {

/// Finite simplicial complex presenting a closed oriented triangulated
/// manifold. Simplices are stored per dimension in lexicographic order, so
/// every iteration over the complex is deterministic.
///
/// Construction always verifies: closure under faces, purity (every simplex
/// is a face of a top simplex), the closed-pseudomanifold condition (every
/// (n-1)-simplex lies in exactly two top simplices), connectedness, and
/// consistency of the orientation across shared faces.
class SimplicialComplex {
 public:
  /// Builds the closure of `tops` and orients it by propagation from the
  /// lexicographically first top simplex (+1).
  static SimplicialComplex from_top_simplices(int n,
                                              std::vector<std::string> names,
                                              std::vector<Simplex> tops);

  /// As above but with an explicitly given orientation, which is verified.
  static SimplicialComplex from_oriented(int n, std::vector<std::string> names,
                                         std::map<Simplex, int> orientation);

  int n() const { return n_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }

  const std::vector<Simplex>& simplices(int d) const;
  bool has(const Simplex& s) const;
  /// Index of s within simplices(dim(s)); throws if absent.
  int index_of(const Simplex& s) const;

  /// Vertices v with s+{v} a simplex.
  const std::vector<Vertex>& cofacet_vertices(const Simplex& s) const;

  /// All simplices containing s (the open star), every dimension, sorted.
  std::vector<Simplex> open_star(const Simplex& s) const;

  /// All faces of open-star members (the closed star), sorted.
  std::vector<Simplex> closed_star(const Simplex& s) const;

  /// +1/-1 per top simplex; globally consistent.
  const std::map<Simplex, int>& orientation() const { return orientation_; }
  int orientation_of(const Simplex& top) const;

  long euler_characteristic() const;
  std::string str(const Simplex& s) const { return simplex_str(s, names_); }

 private:
  SimplicialComplex() = default;
  void build_closure(const std::vector<Simplex>& tops);
  void build_indices();
  void propagate_orientation();
  void validate() const;

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> index_;
  std::map<Simplex, std::vector<Vertex>> cofacets_;
  std::map<Simplex, int> orientation_;
};

}  // namespace dbcalc
