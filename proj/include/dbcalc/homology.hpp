#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dbcalc/chains.hpp"
#include "dbcalc/complex.hpp"
#include "dbcalc/linalg.hpp"

namespace dbcalc {

/// Finitely generated abelian group ker(bout)/im(bin), presented by a pair of
/// integer matrices with bout * bin = 0.  Generators are ambient vectors,
/// coordinates split into a free part and a torsion part reduced mod the
/// invariant-factor orders.
class QuotientPresentation {
 public:
  QuotientPresentation(const Snf& sbout, const ZMat& bin);

  int ambient_dim() const { return n_; }
  int betti() const { return static_cast<int>(free_gens_.size()); }
  const std::vector<Int>& torsion_orders() const { return torsion_orders_; }
  const std::vector<std::vector<Int>>& free_generators() const { return free_gens_; }
  const std::vector<std::vector<Int>>& torsion_generators() const { return torsion_gens_; }

  struct Coords {
    std::vector<Int> free;
    std::vector<Int> torsion;  // entry i reduced into [0, order_i)
    bool is_zero() const;
  };

  bool is_cycle(const std::vector<Int>& v) const;
  Coords coords(const std::vector<Int>& cycle) const;
  bool is_zero_class(const std::vector<Int>& cycle) const;
  /// Integer t with bin * t = cycle, empty when the class is nonzero.
  std::optional<std::vector<Int>> preimage(const std::vector<Int>& cycle) const;

 private:
  /// Coordinates in the saturated kernel basis (empty if not in the kernel).
  std::optional<std::vector<Int>> kernel_coords(const std::vector<Int>& v) const;

  int n_ = 0;
  int kdim_ = 0;       // rank of the kernel of bout
  ZMat kv_, kvinv_;    // column/inverse transform of the bout form
  int krank_ = 0;      // rank of bout; kernel basis = kv_ columns past it
  Snf sx_;             // presentation matrix of im(bin) in kernel coordinates
  std::vector<Int> torsion_orders_;
  std::vector<std::vector<Int>> free_gens_;
  std::vector<std::vector<Int>> torsion_gens_;
  std::vector<int> torsion_rows_;  // rows of the diagonal with order > 1
};

/// Lazy per-complex cache of boundary matrices and their normal forms,
/// homology and cohomology presentations, and rational solvers against the
/// (co)boundary maps.
class ComplexHomology {
 public:
  /// Owns its copy of the complex so cached presentations can never dangle.
  explicit ComplexHomology(SimplicialComplex k) : k_(std::move(k)) {}
  ComplexHomology(const ComplexHomology&) = delete;

  const SimplicialComplex& complex() const { return k_; }

  /// Matrix of the boundary map C_d -> C_{d-1}; valid for d in [0, n+1].
  const ZMat& boundary_matrix(int d);
  const Snf& boundary_snf(int d);
  /// Form of the coboundary map out of degree d (the transposed tower).
  const Snf& coboundary_snf(int d);
  QuotientPresentation& homology(int d);
  QuotientPresentation& cohomology(int d);

  /// Some rational x of degree d with (coboundary of x) = rhs, if any.
  std::optional<Cochain> solve_coboundary(int d, const Cochain& rhs);
  /// Some rational x of dimension d with (boundary of x) = rhs, if any.
  std::optional<Chain> solve_boundary(int d, const Chain& rhs);

  std::vector<Int> chain_vector(const Chain& c) const;
  std::vector<Int> cochain_vector(const Cochain& c) const;
  std::vector<Rat> chain_qvector(const Chain& c) const;
  std::vector<Rat> cochain_qvector(const Cochain& c) const;
  Chain vector_chain(int d, const std::vector<Int>& v) const;
  Cochain vector_cochain(int d, const std::vector<Int>& v) const;
  Chain qvector_chain(int d, const std::vector<Rat>& v) const;
  Cochain qvector_cochain(int d, const std::vector<Rat>& v) const;

  /// Sum of the oriented top simplices; a cycle by the orientation check.
  Chain fundamental_cycle() const;

 private:
  SimplicialComplex k_;
  std::vector<std::optional<ZMat>> bmat_;
  std::vector<std::optional<Snf>> bsnf_, cosnf_;
  std::vector<std::unique_ptr<QuotientPresentation>> hom_, coh_;
};

/// True when the closed rational cochain pairs to an integer against every
/// generator of homology in its degree.
bool has_integral_periods(ComplexHomology& h, const Cochain& u);

/// "0", "Z", "Z^2", "Z_4", "Z^2 + Z_2 + Z_4", ... free part first.
std::string group_string(const QuotientPresentation& p);

}  // namespace dbcalc
