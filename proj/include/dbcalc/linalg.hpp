#pragma once

#include <optional>
#include <vector>

#include "dbcalc/rational.hpp"

namespace dbcalc {

/// Dense integer matrix, row-major.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static ZMat identity(int n);

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

ZMat mul(const ZMat& x, const ZMat& y);
std::vector<Int> mul(const ZMat& x, const std::vector<Int>& v);
std::vector<Rat> mul(const ZMat& x, const std::vector<Rat>& v);
ZMat transpose(const ZMat& m);

/// Smith normal form d = u * a * v with unimodular u, v and their inverses;
/// diagonal entries nonnegative and divisibility-chained. Pivots are chosen
/// by magnitude and then fill, which keeps the transforms small on incidence
/// matrices.
struct Snf {
  ZMat d, u, uinv, v, vinv;
  int rank = 0;

  const Int& diag(int i) const { return d.at(i, i); }
};

Snf smith_normal_form(const ZMat& a);

/// The induced form of the transposed matrix; no new elimination.
Snf snf_transpose(const Snf& s);

/// Integer solve a x = b through a precomputed form; empty when no integer
/// solution exists.
std::optional<std::vector<Int>> snf_solve(const Snf& s, const std::vector<Int>& b);

/// Rational solve a x = b through the same form; empty when inconsistent.
std::optional<std::vector<Rat>> snf_solve_rational(const Snf& s,
                                                   const std::vector<Rat>& b);

/// Columns forming a basis of the saturated integer kernel lattice of a.
std::vector<std::vector<Int>> kernel_basis(const Snf& s);

/// Dense rational matrix with a recorded row reduction, so repeated solves
/// against the same matrix cost one substitution each. Meant for the small
/// per-star systems, not the global boundary maps.
class QSolver {
 public:
  explicit QSolver(std::vector<std::vector<Rat>> a);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Any rational solution of A x = b, or empty if inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

 private:
  int rows_, cols_;
  std::vector<std::vector<Rat>> r_;  // echelon form of A
  std::vector<std::vector<Rat>> t_;  // T A = R
  std::vector<int> pivot_col_;       // one entry per pivot row
};

}  // namespace dbcalc
