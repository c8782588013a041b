#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dbcalc/rational.hpp"

namespace dbcalc {

using Vertex = int;

/// A simplex is its strictly increasing vertex list. The empty simplex is
/// used as the single carrier of Cech-degree (-1) objects.
using Simplex = std::vector<Vertex>;

inline bool is_sorted_simplex(const Simplex& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Face with the i-th vertex removed.
inline Simplex face(const Simplex& s, int i) {
  Simplex f = s;
  f.erase(f.begin() + i);
  return f;
}

/// First k+1 vertices.
inline Simplex front_face(const Simplex& s, int k) {
  return Simplex(s.begin(), s.begin() + k + 1);
}

/// Last k+1 vertices.
inline Simplex back_face(const Simplex& s, int k) {
  return Simplex(s.end() - k - 1, s.end());
}

inline bool contains(const Simplex& big, const Simplex& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline bool has_vertex(const Simplex& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

/// Position v would occupy (or occupies) in s.
inline int position(const Simplex& s, Vertex v) {
  return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
}

/// Sorted union; caller guarantees the result is a vertex set of a simplex.
inline Simplex join(const Simplex& a, const Simplex& b) {
  Simplex r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

/// Inserts v into s; returns the sign (-1)^position, or 0 if v already in s.
/// This is the sign relating the ordered tuple (v, s...) to its sorted form.
inline int insert_sign(const Simplex& s, Vertex v, Simplex* out) {
  int pos = position(s, v);
  if (pos < static_cast<int>(s.size()) && s[pos] == v) return 0;
  *out = s;
  out->insert(out->begin() + pos, v);
  return (pos % 2 == 0) ? 1 : -1;
}

inline std::string simplex_str(const Simplex& s,
                               const std::vector<std::string>& names) {
  std::string r;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += names[static_cast<std::size_t>(s[i])];
  }
  return r;
}

}  // namespace dbcalc
