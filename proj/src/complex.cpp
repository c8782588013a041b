#include "dbcalc/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dbcalc {

SimplicialComplex SimplicialComplex::from_top_simplices(
    int n, std::vector<std::string> names, std::vector<Simplex> tops) {
  SimplicialComplex K;
  K.n_ = n;
  K.names_ = std::move(names);
  K.build_closure(tops);
  K.build_indices();
  K.propagate_orientation();
  K.validate();
  return K;
}

SimplicialComplex SimplicialComplex::from_oriented(
    int n, std::vector<std::string> names, std::map<Simplex, int> orientation) {
  SimplicialComplex K;
  K.n_ = n;
  K.names_ = std::move(names);
  std::vector<Simplex> tops;
  for (const auto& [s, o] : orientation) {
    if (dim(s) != n || (o != 1 && o != -1))
      throw InputError("orientation must assign +1/-1 to top simplices");
    tops.push_back(s);
  }
  K.build_closure(tops);
  K.build_indices();
  K.orientation_ = std::move(orientation);
  K.validate();
  return K;
}

void SimplicialComplex::build_closure(const std::vector<Simplex>& tops) {
  if (n_ < 1) throw InputError("complex dimension must be >= 1");
  std::vector<std::set<Simplex>> acc(static_cast<std::size_t>(n_) + 1);
  std::deque<Simplex> queue;
  for (const Simplex& t : tops) {
    if (!is_sorted_simplex(t) || dim(t) != n_)
      throw InputError("top simplices must be sorted vertex lists of dimension n");
    for (Vertex v : t)
      if (v < 0 || v >= static_cast<int>(names_.size()))
        throw InputError("vertex index out of range");
    if (acc[static_cast<std::size_t>(n_)].insert(t).second) queue.push_back(t);
  }
  while (!queue.empty()) {
    Simplex s = queue.front();
    queue.pop_front();
    if (dim(s) == 0) continue;
    for (int i = 0; i <= dim(s); ++i) {
      Simplex f = face(s, i);
      if (acc[static_cast<std::size_t>(dim(f))].insert(f).second) queue.push_back(f);
    }
  }
  if (acc[0].size() != names_.size())
    throw InputError("isolated vertices are not permitted");
  by_dim_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (int d = 0; d <= n_; ++d)
    by_dim_[static_cast<std::size_t>(d)] =
        std::vector<Simplex>(acc[static_cast<std::size_t>(d)].begin(),
                             acc[static_cast<std::size_t>(d)].end());
}

void SimplicialComplex::build_indices() {
  index_.assign(by_dim_.size(), {});
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
      index_[d][by_dim_[d][i]] = static_cast<int>(i);
  for (int d = 0; d < n_; ++d)
    for (const Simplex& s : by_dim_[static_cast<std::size_t>(d)]) cofacets_[s];
  for (int d = 1; d <= n_; ++d)
    for (const Simplex& s : by_dim_[static_cast<std::size_t>(d)])
      for (int i = 0; i <= d; ++i) cofacets_[face(s, i)].push_back(s[i]);
  for (auto& [s, vs] : cofacets_) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
}

void SimplicialComplex::propagate_orientation() {
  // Adjacency of top simplices across shared (n-1)-faces, then a BFS sign
  // assignment; inconsistency on any edge means the manifold is unorientable.
  const auto& tops = by_dim_[static_cast<std::size_t>(n_)];
  std::map<Simplex, std::vector<int>> face_to_tops;
  for (std::size_t t = 0; t < tops.size(); ++t)
    for (int i = 0; i <= n_; ++i)
      face_to_tops[face(tops[t], i)].push_back(static_cast<int>(t));
  std::vector<int> sign(tops.size(), 0);
  std::deque<int> queue;
  sign[0] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int i = 0; i <= n_; ++i) {
      Simplex f = face(tops[static_cast<std::size_t>(t)], i);
      for (int u : face_to_tops[f]) {
        if (u == t) continue;
        int j = 0;
        while (face(tops[static_cast<std::size_t>(u)], j) != f) ++j;
        int needed = -sign[static_cast<std::size_t>(t)] *
                     ((i + j) % 2 == 0 ? 1 : -1);
        if (sign[static_cast<std::size_t>(u)] == 0) {
          sign[static_cast<std::size_t>(u)] = needed;
          queue.push_back(u);
        } else if (sign[static_cast<std::size_t>(u)] != needed) {
          throw InputError("complex is not orientable");
        }
      }
    }
  }
  for (std::size_t t = 0; t < tops.size(); ++t) {
    if (sign[t] == 0) throw InputError("complex is not connected");
    orientation_[tops[t]] = sign[t];
  }
}

void SimplicialComplex::validate() const {
  for (int d = 0; d < n_; ++d)
    for (const Simplex& s : by_dim_[static_cast<std::size_t>(d)])
      if (cofacets_.at(s).empty())
        throw InputError("complex is not pure of dimension n");
  // Closed pseudomanifold: every (n-1)-simplex bounds exactly two tops.
  for (const Simplex& s : by_dim_[static_cast<std::size_t>(n_ - 1)])
    if (cofacets_.at(s).size() != 2)
      throw InputError("an (n-1)-simplex does not lie in exactly two tops: " + str(s));
  if (orientation_.size() != by_dim_[static_cast<std::size_t>(n_)].size())
    throw InputError("orientation must cover every top simplex");
  for (const auto& [s, o] : orientation_) {
    if (!has(s) || dim(s) != n_) throw InputError("orientation key is not a top simplex");
    if (o != 1 && o != -1) throw InputError("orientation values must be +1/-1");
  }
  // Cross-face consistency, i.e. the fundamental chain is a cycle.
  for (const Simplex& f : by_dim_[static_cast<std::size_t>(n_ - 1)]) {
    int total = 0;
    for (Vertex v : cofacets_.at(f)) {
      Simplex t;
      int s = insert_sign(f, v, &t);
      total += s * orientation_.at(t);
    }
    if (total != 0) throw InputError("orientation is inconsistent across " + str(f));
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> empty;
  if (d < 0 || d > n_) return empty;
  return by_dim_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::has(const Simplex& s) const {
  int d = dim(s);
  if (d < 0 || d > n_) return false;
  return index_[static_cast<std::size_t>(d)].count(s) > 0;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  int d = dim(s);
  if (d < 0 || d > n_) throw PreconditionError("simplex dimension out of range");
  auto it = index_[static_cast<std::size_t>(d)].find(s);
  if (it == index_[static_cast<std::size_t>(d)].end())
    throw PreconditionError("not a simplex of the complex: " + str(s));
  return it->second;
}

const std::vector<Vertex>& SimplicialComplex::cofacet_vertices(const Simplex& s) const {
  static const std::vector<Vertex> empty;
  auto it = cofacets_.find(s);
  return it == cofacets_.end() ? empty : it->second;
}

std::vector<Simplex> SimplicialComplex::open_star(const Simplex& s) const {
  // BFS upward through cofacets; sorted output for determinism.
  std::set<Simplex> seen;
  std::deque<Simplex> queue;
  if (has(s)) {
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Simplex t = queue.front();
    queue.pop_front();
    for (Vertex v : cofacet_vertices(t)) {
      Simplex u;
      if (insert_sign(t, v, &u) == 0) continue;
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return std::vector<Simplex>(seen.begin(), seen.end());
}

std::vector<Simplex> SimplicialComplex::closed_star(const Simplex& s) const {
  std::set<Simplex> seen;
  std::deque<Simplex> queue;
  for (Simplex t : open_star(s))
    if (seen.insert(t).second) queue.push_back(t);
  while (!queue.empty()) {
    Simplex t = queue.front();
    queue.pop_front();
    if (dim(t) == 0) continue;
    for (int i = 0; i <= dim(t); ++i) {
      Simplex f = face(t, i);
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  return std::vector<Simplex>(seen.begin(), seen.end());
}

int SimplicialComplex::orientation_of(const Simplex& top) const {
  auto it = orientation_.find(top);
  if (it == orientation_.end())
    throw PreconditionError("not an oriented top simplex: " + str(top));
  return it->second;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= n_; ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplices(d).size());
  return chi;
}

}  // namespace dbcalc
