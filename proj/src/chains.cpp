#include "dbcalc/chains.hpp"

#include <functional>

namespace dbcalc {

void Chain::add(const Simplex& s, const Rat& v) {
  if (v == 0) return;
  auto [it, fresh] = c.try_emplace(s, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

void Cochain::add(const Simplex& s, const Rat& v) {
  if (v == 0) return;
  auto [it, fresh] = c.try_emplace(s, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

namespace {
template <class T>
T combine(const T& a, const T& b, int sb) {
  if (a.d != b.d && !a.c.empty() && !b.c.empty())
    throw PreconditionError("degree mismatch in chain/cochain arithmetic");
  T r = a;
  if (r.c.empty()) r.d = b.d;
  for (const auto& [s, v] : b.c) r.add(s, sb * v);
  return r;
}
template <class T>
T scale(const Rat& r, const T& a) {
  T out;
  out.d = a.d;
  if (r == 0) return out;
  out.c = a.c;
  for (auto& [s, v] : out.c) v *= r;
  return out;
}
template <class T>
bool integral(const T& a) {
  for (const auto& [s, v] : a.c)
    if (!is_integer(v)) return false;
  return true;
}
}  // namespace

Chain operator+(const Chain& a, const Chain& b) { return combine(a, b, 1); }
Chain operator-(const Chain& a, const Chain& b) { return combine(a, b, -1); }
Chain operator*(const Rat& r, const Chain& a) { return scale(r, a); }
Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, 1); }
Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, -1); }
Cochain operator*(const Rat& r, const Cochain& a) { return scale(r, a); }
bool operator==(const Chain& a, const Chain& b) {
  return a.c == b.c && (a.c.empty() || a.d == b.d);
}
bool operator==(const Cochain& a, const Cochain& b) {
  return a.c == b.c && (a.c.empty() || a.d == b.d);
}

bool is_integral(const Chain& a) { return integral(a); }
bool is_integral(const Cochain& a) { return integral(a); }

Rat degree_b0(const Chain& a) {
  if (a.d != 0) throw PreconditionError("degree_b0 expects a 0-chain");
  if (!is_integral(a))
    throw PreconditionError("degree_b0 expects integer coefficients");
  Rat r(0);
  for (const auto& [s, v] : a.c) r += v;
  return r;
}

Chain boundary(const Chain& a) {
  Chain r;
  r.d = a.d - 1;
  if (a.d == 0) return r;  // boundary of 0-chains is zero (not the degree map)
  for (const auto& [s, v] : a.c)
    for (int i = 0; i <= dim(s); ++i) r.add(face(s, i), (i % 2 == 0 ? v : -v));
  return r;
}

Cochain coboundary(const SimplicialComplex& K, const Cochain& w) {
  Cochain r;
  r.d = w.d + 1;
  for (const auto& [s, v] : w.c) {
    for (Vertex u : K.cofacet_vertices(s)) {
      Simplex t;
      int sg = insert_sign(s, u, &t);
      if (sg != 0) r.add(t, sg * v);
    }
  }
  return r;
}

namespace {
// Emits every simplex of K whose leading face is `s` and whose total vertex
// count is `want`, by growing one trailing vertex at a time.
void grow_tails(const SimplicialComplex& K, const Simplex& s, std::size_t want,
                const std::function<void(const Simplex&)>& emit) {
  if (s.size() == want) {
    emit(s);
    return;
  }
  for (Vertex v : K.cofacet_vertices(s)) {
    if (v <= s.back()) continue;
    Simplex t = s;
    t.push_back(v);
    grow_tails(K, t, want, emit);
  }
}
}  // namespace

Cochain cup(const SimplicialComplex& K, const Cochain& x, const Cochain& y) {
  Cochain r;
  r.d = x.d + y.d;
  if (x.d < 0 || y.d < 0) throw PreconditionError("cup needs nonnegative degrees");
  for (const auto& [s, v] : x.c) {
    grow_tails(K, s, static_cast<std::size_t>(r.d) + 1, [&](const Simplex& t) {
      Rat yv = y.at(back_face(t, y.d));
      if (yv != 0) r.add(t, v * yv);
    });
  }
  return r;
}

Rat pairing(const Cochain& w, const Chain& a) {
  if (w.d != a.d && !w.c.empty() && !a.c.empty())
    throw PreconditionError("pairing degree mismatch");
  Rat r(0);
  const bool wa = w.c.size() <= a.c.size();
  const auto& small = wa ? w.c : a.c;
  for (const auto& [s, v] : small) r += v * (wa ? a.at(s) : w.at(s));
  return r;
}

Chain cap_front(const Cochain& x, const Chain& a) {
  Chain r;
  r.d = a.d - x.d;
  if (r.d < 0) throw PreconditionError("cap_front dimension underflow");
  for (const auto& [t, v] : a.c) {
    Rat xv = x.at(front_face(t, x.d));
    if (xv != 0) r.add(back_face(t, r.d), v * xv);
  }
  return r;
}

Chain cap_back(const Cochain& x, const Chain& a) {
  Chain r;
  r.d = a.d - x.d;
  if (r.d < 0) throw PreconditionError("cap_back dimension underflow");
  for (const auto& [t, v] : a.c) {
    Rat xv = x.at(back_face(t, x.d));
    if (xv != 0) r.add(front_face(t, r.d), v * xv);
  }
  return r;
}

Cochain unit_cochain(const SimplicialComplex& K) {
  Cochain r;
  r.d = 0;
  for (const Simplex& v : K.simplices(0)) r.c[v] = 1;
  return r;
}

Cochain elementary_cochain(const Simplex& s) {
  Cochain r;
  r.d = dim(s);
  r.c[s] = 1;
  return r;
}

Chain elementary_chain(const Simplex& s) {
  Chain r;
  r.d = dim(s);
  r.c[s] = 1;
  return r;
}

}  // namespace dbcalc
