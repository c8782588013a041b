#include "dbcalc/builtins.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dbcalc {

SimplicialComplex circle(int k) {
  if (k < 3) throw PreconditionError("circle needs at least 3 vertices");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Simplex> tops;
  for (int i = 0; i + 1 < k; ++i) tops.push_back({i, i + 1});
  tops.push_back({0, k - 1});
  return SimplicialComplex::from_top_simplices(1, names, tops);
}

SimplicialComplex sphere(int n) {
  if (n < 1) throw PreconditionError("sphere dimension must be >= 1");
  std::vector<std::string> names;
  for (int i = 0; i <= n + 1; ++i) names.push_back("v" + std::to_string(i));
  Simplex full;
  for (int i = 0; i <= n + 1; ++i) full.push_back(i);
  std::vector<Simplex> tops;
  for (int i = 0; i <= n + 1; ++i) tops.push_back(face(full, i));
  return SimplicialComplex::from_top_simplices(n, names, tops);
}

SimplicialComplex torus2() {
  std::vector<std::string> names;
  for (int i = 0; i < 7; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Simplex> tops;
  auto tri = [&](int a, int b, int c) {
    Simplex s{a % 7, b % 7, c % 7};
    std::sort(s.begin(), s.end());
    tops.push_back(s);
  };
  for (int i = 0; i < 7; ++i) {
    tri(i, i + 1, i + 3);
    tri(i, i + 2, i + 3);
  }
  return SimplicialComplex::from_top_simplices(2, names, tops);
}

namespace {

/// Staircase (categorical) product triangulation. Vertex (x,y) gets the name
/// xname*yname and the id ix*|Y0|+iy; monotone lattice paths through each top
/// simplex pair give the top simplices.
SimplicialComplex staircase_product(const SimplicialComplex& X,
                                    const SimplicialComplex& Y) {
  const int vy = Y.vertex_count();
  std::vector<std::string> names;
  for (const std::string& nx : X.vertex_names())
    for (const std::string& ny : Y.vertex_names()) names.push_back(nx + "*" + ny);
  std::set<Simplex> tops;
  std::vector<std::pair<int, int>> path;
  auto walk = [&](auto&& self, const Simplex& sx, const Simplex& sy) -> void {
    auto [ix, iy] = path.back();
    if (ix == dim(sx) && iy == dim(sy)) {
      Simplex t;
      for (auto [a, b] : path) t.push_back(sx[static_cast<std::size_t>(a)] * vy +
                                           sy[static_cast<std::size_t>(b)]);
      tops.insert(t);
      return;
    }
    if (ix < dim(sx)) {
      path.emplace_back(ix + 1, iy);
      self(self, sx, sy);
      path.pop_back();
    }
    if (iy < dim(sy)) {
      path.emplace_back(ix, iy + 1);
      self(self, sx, sy);
      path.pop_back();
    }
  };
  for (const Simplex& sx : X.simplices(X.n()))
    for (const Simplex& sy : Y.simplices(Y.n())) {
      path.assign(1, {0, 0});
      walk(walk, sx, sy);
    }
  return SimplicialComplex::from_top_simplices(
      X.n() + Y.n(), names, std::vector<Simplex>(tops.begin(), tops.end()));
}

}  // namespace

SimplicialComplex torus3() {
  SimplicialComplex c = circle(3);
  return staircase_product(staircase_product(c, c), c);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
  // Cell ids in (dimension, lexicographic) order; flags through each top
  // simplex enumerate the subdivided tops.
  std::map<Simplex, int> cell_id;
  std::vector<std::string> names;
  for (int d = 0; d <= K.n(); ++d)
    for (const Simplex& s : K.simplices(d)) {
      cell_id[s] = static_cast<int>(names.size());
      std::string nm;
      for (std::size_t i = 0; i < s.size(); ++i)
        nm += (i ? "." : "") + K.vertex_names()[static_cast<std::size_t>(s[i])];
      names.push_back(nm);
    }
  std::vector<Simplex> tops;
  for (const Simplex& t : K.simplices(K.n())) {
    Simplex order = t;
    std::sort(order.begin(), order.end());
    do {
      Simplex flag_cell;
      Simplex sd_top;
      for (Vertex v : order) {
        flag_cell.push_back(v);
        std::sort(flag_cell.begin(), flag_cell.end());
        sd_top.push_back(cell_id.at(flag_cell));
      }
      std::sort(sd_top.begin(), sd_top.end());
      tops.push_back(sd_top);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_top_simplices(K.n(), names, tops);
}

SimplicialComplex lens(int k) {
  if (k < 2) throw PreconditionError("lens order must be >= 2");
  const int m = 2 * k;  // vertices per polygon factor
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("a" + std::to_string(i));
  for (int j = 0; j < m; ++j) names.push_back("b" + std::to_string(j));
  std::vector<Simplex> tops;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Simplex t{i, (i + 1) % m, m + j, m + (j + 1) % m};
      std::sort(t.begin(), t.end());
      tops.push_back(t);
    }
  SimplicialComplex sphere3 =
      SimplicialComplex::from_top_simplices(3, names, tops);
  SimplicialComplex sd = barycentric_subdivision(sphere3);

  // The order-k rotation advances both polygons by two steps. On subdivision
  // vertices (= cells of the join) it permutes vertex lists.
  auto rotate_cell_name = [&](const std::string& nm) {
    // Cell names are dot-joined join-vertex names ("a3.b0.b1" etc).
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : nm + ".") {
      if (ch == '.') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    std::vector<std::string> out;
    for (std::string& p : parts) {
      int idx = std::stoi(p.substr(1));
      out.push_back(p.substr(0, 1) + std::to_string((idx + 2) % m));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  // Map each sd vertex to its image under the rotation.
  std::map<std::vector<std::string>, int> by_parts;
  auto parts_of = [&](const std::string& nm) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : nm + ".") {
      if (ch == '.') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  for (int v = 0; v < sd.vertex_count(); ++v)
    by_parts[parts_of(sd.vertex_names()[static_cast<std::size_t>(v)])] = v;
  std::vector<int> g(static_cast<std::size_t>(sd.vertex_count()));
  for (int v = 0; v < sd.vertex_count(); ++v)
    g[static_cast<std::size_t>(v)] =
        by_parts.at(rotate_cell_name(sd.vertex_names()[static_cast<std::size_t>(v)]));

  // Orbit representatives (minimum id) become the quotient vertices.
  std::vector<int> rep(static_cast<std::size_t>(sd.vertex_count()), -1);
  std::vector<int> quotient_id(static_cast<std::size_t>(sd.vertex_count()), -1);
  std::vector<std::string> qnames;
  for (int v = 0; v < sd.vertex_count(); ++v) {
    if (rep[static_cast<std::size_t>(v)] != -1) continue;
    int id = static_cast<int>(qnames.size());
    qnames.push_back(sd.vertex_names()[static_cast<std::size_t>(v)]);
    int w = v;
    for (int step = 0; step < k; ++step) {
      if (rep[static_cast<std::size_t>(w)] != -1) {
        if (rep[static_cast<std::size_t>(w)] != v)
          throw PreconditionError("lens quotient orbits are inconsistent");
      } else {
        rep[static_cast<std::size_t>(w)] = v;
        quotient_id[static_cast<std::size_t>(w)] = id;
      }
      w = g[static_cast<std::size_t>(w)];
    }
    if (w != v) throw PreconditionError("lens rotation order mismatch");
  }

  std::set<Simplex> qtops;
  for (const Simplex& t : sd.simplices(3)) {
    Simplex q;
    for (Vertex v : t) q.push_back(quotient_id[static_cast<std::size_t>(v)]);
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end())
      throw PreconditionError("lens quotient identified vertices inside a simplex");
    qtops.insert(q);
  }
  if (qtops.size() * static_cast<std::size_t>(k) != sd.simplices(3).size())
    throw PreconditionError("lens quotient is not a free k-fold cover image");
  return SimplicialComplex::from_top_simplices(
      3, qnames, std::vector<Simplex>(qtops.begin(), qtops.end()));
}

SimplicialComplex builtin_complex(const std::string& spec) {
  std::string name = spec;
  int arg = -1;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    try {
      arg = std::stoi(spec.substr(pos + 1));
    } catch (...) {
      throw InputError("bad builtin parameter in '" + spec + "'");
    }
  }
  if (name == "circle") return circle(arg == -1 ? 3 : arg);
  if (name == "sphere") return sphere(arg == -1 ? 2 : arg);
  if (name == "torus2") return torus2();
  if (name == "torus3") return torus3();
  if (name == "lens") return lens(arg == -1 ? 4 : arg);
  throw InputError("unknown builtin complex '" + spec + "'");
}

}  // namespace dbcalc
