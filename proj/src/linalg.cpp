#include "dbcalc/linalg.hpp"

#include <cstdlib>

namespace dbcalc {

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat mul(const ZMat& x, const ZMat& y) {
  if (x.cols != y.rows) throw PreconditionError("ZMat shape mismatch");
  ZMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

std::vector<Int> mul(const ZMat& x, const std::vector<Int>& v) {
  if (x.cols != static_cast<int>(v.size()))
    throw PreconditionError("ZMat/vector shape mismatch");
  std::vector<Int> r(static_cast<std::size_t>(x.rows));
  for (int j = 0; j < x.cols; ++j) {
    const Int& vj = v[static_cast<std::size_t>(j)];
    if (vj == 0) continue;
    for (int i = 0; i < x.rows; ++i)
      if (x.at(i, j) != 0) r[static_cast<std::size_t>(i)] += x.at(i, j) * vj;
  }
  return r;
}

std::vector<Rat> mul(const ZMat& x, const std::vector<Rat>& v) {
  if (x.cols != static_cast<int>(v.size()))
    throw PreconditionError("ZMat/vector shape mismatch");
  std::vector<Rat> r(static_cast<std::size_t>(x.rows), Rat(0));
  for (int j = 0; j < x.cols; ++j) {
    const Rat& vj = v[static_cast<std::size_t>(j)];
    if (vj == 0) continue;
    for (int i = 0; i < x.rows; ++i)
      if (x.at(i, j) != 0) r[static_cast<std::size_t>(i)] += Rat(x.at(i, j)) * vj;
  }
  return r;
}

ZMat transpose(const ZMat& m) {
  ZMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

namespace {

struct Worker {
  ZMat a, u, uinv, v, vinv;

  explicit Worker(const ZMat& m)
      : a(m), u(ZMat::identity(m.rows)), uinv(ZMat::identity(m.rows)),
        v(ZMat::identity(m.cols)), vinv(ZMat::identity(m.cols)) {}

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
    for (int i = 0; i < uinv.rows; ++i) std::swap(uinv.at(i, r1), uinv.at(i, r2));
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    for (int j = 0; j < vinv.cols; ++j) std::swap(vinv.at(c1, j), vinv.at(c2, j));
  }
  // row[r] += q * row[t]
  void add_row(int r, int t, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < a.cols; ++j)
      if (a.at(t, j) != 0) a.at(r, j) += q * a.at(t, j);
    for (int j = 0; j < u.cols; ++j)
      if (u.at(t, j) != 0) u.at(r, j) += q * u.at(t, j);
    for (int i = 0; i < uinv.rows; ++i)
      if (uinv.at(i, r) != 0) uinv.at(i, t) -= q * uinv.at(i, r);
  }
  // col[c] += q * col[t]
  void add_col(int c, int t, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < a.rows; ++i)
      if (a.at(i, t) != 0) a.at(i, c) += q * a.at(i, t);
    for (int i = 0; i < v.rows; ++i)
      if (v.at(i, t) != 0) v.at(i, c) += q * v.at(i, t);
    for (int j = 0; j < vinv.cols; ++j)
      if (vinv.at(c, j) != 0) vinv.at(t, j) -= q * vinv.at(c, j);
  }
  void negate_row(int r) {
    for (int j = 0; j < a.cols; ++j) a.at(r, j) = -a.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    for (int i = 0; i < uinv.rows; ++i) uinv.at(i, r) = -uinv.at(i, r);
  }
};

}  // namespace

Snf smith_normal_form(const ZMat& m) {
  Worker w(m);
  ZMat& a = w.a;
  int t = 0;
  const int bound = std::min(a.rows, a.cols);
  std::vector<int> rnnz(static_cast<std::size_t>(a.rows));
  std::vector<int> cnnz(static_cast<std::size_t>(a.cols));
  while (t < bound) {
    // Pivot choice: smallest magnitude, then least fill (Markowitz count),
    // then position. This keeps the transforms small on sparse inputs.
    for (int i = t; i < a.rows; ++i) rnnz[static_cast<std::size_t>(i)] = 0;
    for (int j = t; j < a.cols; ++j) cnnz[static_cast<std::size_t>(j)] = 0;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j)
        if (a.at(i, j) != 0) {
          ++rnnz[static_cast<std::size_t>(i)];
          ++cnnz[static_cast<std::size_t>(j)];
        }
    int pi = -1, pj = -1;
    long best_fill = 0;
    for (int i = t; i < a.rows; ++i) {
      if (rnnz[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = t; j < a.cols; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        long fill = static_cast<long>(rnnz[static_cast<std::size_t>(i)] - 1) *
                    (cnnz[static_cast<std::size_t>(j)] - 1);
        if (pi == -1) {
          pi = i, pj = j, best_fill = fill;
          continue;
        }
        int cmp = mpz_cmpabs(x.get_mpz_t(), a.at(pi, pj).get_mpz_t());
        if (cmp < 0 || (cmp == 0 && fill < best_fill)) {
          pi = i, pj = j, best_fill = fill;
        }
      }
    }
    if (pi == -1) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = true;
    for (int i = t + 1; i < a.rows; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
      w.add_row(i, t, -q);
      if (a.at(i, t) != 0) clean = false;  // smaller remainder appeared
    }
    for (int j = t + 1; j < a.cols; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
      w.add_col(j, t, -q);
      if (a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // re-select the pivot among the smaller entries
    if (a.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  const int rank = t;

  // Enforce the divisor chain by local 2x2 fixes on the now-diagonal matrix:
  // diag(x, y) -> diag(gcd, +-lcm) touching only the two rows and columns.
  auto fix_pair = [&](int i, int j) {
    w.add_col(i, j, Int(1));  // a(j, i) becomes diag j
    while (a.at(j, i) != 0) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, i).get_mpz_t(), a.at(j, i).get_mpz_t());
      w.add_row(i, j, -q);
      w.swap_rows(i, j);
    }
    // Row i now holds (gcd, y) with gcd dividing y; clear y by an exact step.
    if (a.at(i, j) != 0) w.add_col(j, i, -Int(a.at(i, j) / a.at(i, i)));
    if (a.at(i, i) < 0) w.negate_row(i);
    if (a.at(j, j) < 0) w.negate_row(j);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < rank; ++i)
      if (a.at(i + 1, i + 1) % a.at(i, i) != 0) {
        fix_pair(i, i + 1);
        changed = true;
      }
  }

  Snf s;
  s.rank = rank;
  s.d = std::move(w.a);
  s.u = std::move(w.u);
  s.uinv = std::move(w.uinv);
  s.v = std::move(w.v);
  s.vinv = std::move(w.vinv);
  return s;
}

Snf snf_transpose(const Snf& s) {
  Snf t;
  t.rank = s.rank;
  t.d = transpose(s.d);
  t.u = transpose(s.v);
  t.uinv = transpose(s.vinv);
  t.v = transpose(s.u);
  t.vinv = transpose(s.uinv);
  return t;
}

std::optional<std::vector<Int>> snf_solve(const Snf& s, const std::vector<Int>& b) {
  std::vector<Int> ub = mul(s.u, b);
  std::vector<Int> y(static_cast<std::size_t>(s.d.cols));
  for (int i = 0; i < s.d.rows; ++i) {
    const Int& bi = ub[static_cast<std::size_t>(i)];
    if (i < s.rank) {
      if (bi % s.diag(i) != 0) return std::nullopt;
      y[static_cast<std::size_t>(i)] = bi / s.diag(i);
    } else if (bi != 0) {
      return std::nullopt;
    }
  }
  return mul(s.v, y);
}

std::optional<std::vector<Rat>> snf_solve_rational(const Snf& s,
                                                   const std::vector<Rat>& b) {
  std::vector<Rat> ub = mul(s.u, b);
  std::vector<Rat> y(static_cast<std::size_t>(s.d.cols), Rat(0));
  for (int i = 0; i < s.d.rows; ++i) {
    const Rat& bi = ub[static_cast<std::size_t>(i)];
    if (i < s.rank) {
      y[static_cast<std::size_t>(i)] = bi / Rat(s.diag(i));
    } else if (bi != 0) {
      return std::nullopt;
    }
  }
  return mul(s.v, y);
}

std::vector<std::vector<Int>> kernel_basis(const Snf& s) {
  std::vector<std::vector<Int>> basis;
  for (int j = s.rank; j < s.d.cols; ++j) {
    std::vector<Int> col(static_cast<std::size_t>(s.v.rows));
    for (int i = 0; i < s.v.rows; ++i) col[static_cast<std::size_t>(i)] = s.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

QSolver::QSolver(std::vector<std::vector<Rat>> a)
    : rows_(static_cast<int>(a.size())),
      cols_(a.empty() ? 0 : static_cast<int>(a[0].size())),
      r_(std::move(a)) {
  t_.assign(static_cast<std::size_t>(rows_), {});
  for (int i = 0; i < rows_; ++i) {
    t_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(rows_), Rat(0));
    t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  }
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (r_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    std::swap(r_[static_cast<std::size_t>(p)], r_[static_cast<std::size_t>(row)]);
    std::swap(t_[static_cast<std::size_t>(p)], t_[static_cast<std::size_t>(row)]);
    const Rat inv = 1 / r_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (auto& x : r_[static_cast<std::size_t>(row)]) x *= inv;
    for (auto& x : t_[static_cast<std::size_t>(row)]) x *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const Rat f = r_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        r_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * r_[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
      for (int j = 0; j < rows_; ++j)
        t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
    }
    pivot_col_.push_back(col);
    ++row;
  }
}

std::optional<std::vector<Rat>> QSolver::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw PreconditionError("QSolver rhs size mismatch");
  std::vector<Rat> tb(static_cast<std::size_t>(rows_), Rat(0));
  for (int j = 0; j < rows_; ++j) {
    if (b[static_cast<std::size_t>(j)] == 0) continue;
    for (int i = 0; i < rows_; ++i) {
      const Rat& tij = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (tij != 0) tb[static_cast<std::size_t>(i)] += tij * b[static_cast<std::size_t>(j)];
    }
  }
  const int rank = static_cast<int>(pivot_col_.size());
  for (int i = rank; i < rows_; ++i)
    if (tb[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  std::vector<Rat> x(static_cast<std::size_t>(cols_), Rat(0));
  for (int i = 0; i < rank; ++i)
    x[static_cast<std::size_t>(pivot_col_[static_cast<std::size_t>(i)])] =
        tb[static_cast<std::size_t>(i)];
  return x;
}

}  // namespace dbcalc
