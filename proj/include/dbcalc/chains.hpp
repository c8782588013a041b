#pragma once

#include <map>

#include "dbcalc/complex.hpp"

namespace dbcalc {

/// Sparse rational chain: finitely supported assignment of coefficients to
/// d-simplices. Zero coefficients are never stored.
struct Chain {
  int d = 0;
  std::map<Simplex, Rat> c;

  bool is_zero() const { return c.empty(); }
  Rat at(const Simplex& s) const {
    auto it = c.find(s);
    return it == c.end() ? Rat(0) : it->second;
  }
  void add(const Simplex& s, const Rat& v);
};

/// Sparse rational cochain of degree d; same storage discipline as Chain.
struct Cochain {
  int d = 0;
  std::map<Simplex, Rat> c;

  bool is_zero() const { return c.empty(); }
  Rat at(const Simplex& s) const {
    auto it = c.find(s);
    return it == c.end() ? Rat(0) : it->second;
  }
  void add(const Simplex& s, const Rat& v);
};

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
Chain operator*(const Rat& r, const Chain& a);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Rat& r, const Cochain& a);
bool operator==(const Chain& a, const Chain& b);
bool operator==(const Cochain& a, const Cochain& b);

/// All coefficients integral.
bool is_integral(const Chain& a);
bool is_integral(const Cochain& a);

/// Sum of coefficients of a 0-chain (the discrete version of the degree of a
/// 0-current).
Rat degree_b0(const Chain& a);

Chain boundary(const Chain& a);

/// Simplicial coboundary within K: (d w)(t) = w(boundary t).
Cochain coboundary(const SimplicialComplex& K, const Cochain& w);

/// Alexander-Whitney cup: (x ^ y)(t) = x(front) * y(back), overlapping at the
/// middle vertex.
Cochain cup(const SimplicialComplex& K, const Cochain& x, const Cochain& y);

/// <w, c>: sum over support; degrees must agree.
Rat pairing(const Cochain& w, const Chain& a);

/// Front cap: x eats the leading face. Satisfies
///   <x ^ y, c> = <y, cap_front(x, c)>.
Chain cap_front(const Cochain& x, const Chain& a);

/// Back cap: x eats the trailing face. Satisfies
///   <y ^ x, c> = <y, cap_back(x, c)>.
Chain cap_back(const Cochain& x, const Chain& a);

Cochain unit_cochain(const SimplicialComplex& K);
Cochain elementary_cochain(const Simplex& s);
Chain elementary_chain(const Simplex& s);

}  // namespace dbcalc
