#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dbcalc {

using Int = mpz_class;
using Rat = mpq_class;  // always kept canonical

/// Error for violated operation preconditions (maps to CLI exit code 3).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Error for malformed inputs (bad JSON, bad flags beyond the parser's reach).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Floor of a rational as an integer.
inline Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

/// Representative of q mod 1 in [0, 1).
inline Rat mod1(const Rat& q) {
  Rat r = q - Rat(rat_floor(q));
  r.canonicalize();
  return r;
}

/// Residue class in R/Z held as the exact rational representative in [0, 1).
class RmodZ {
 public:
  RmodZ() : v_(0) {}
  explicit RmodZ(const Rat& q) : v_(mod1(q)) {}

  const Rat& representative() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  RmodZ operator+(const RmodZ& o) const { return RmodZ(v_ + o.v_); }
  RmodZ operator-(const RmodZ& o) const { return RmodZ(v_ - o.v_); }
  RmodZ operator-() const { return RmodZ(-v_); }
  bool operator==(const RmodZ& o) const { return v_ == o.v_; }
  bool operator!=(const RmodZ& o) const { return v_ != o.v_; }

  /// Well-defined only for integer scalars.
  RmodZ times(const Int& k) const { return RmodZ(Rat(k) * v_); }

  std::string str() const { return v_.get_str(); }  // "num/den" or "num"

 private:
  Rat v_;
};

/// Parses "num/den" or "num"; rejects zero denominators.
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  if (q.get_den() == 0) throw InputError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace dbcalc
