#include "shiftkit/complex.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace shiftkit {
namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("ambient vertex count " + std::to_string(n) + " outside 0..64");
  }
}

void check_within(Face f, int n) {
  if (f.max_vertex() > n) {
    throw std::out_of_range("face " + f.to_string() + " has a label outside 1.." +
                            std::to_string(n));
  }
}

std::vector<std::vector<Face>> group_by_size(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<std::vector<Face>> levels;
  for (Face f : faces) {
    const auto k = static_cast<std::size_t>(f.size());
    if (levels.size() <= k) levels.resize(k + 1);
    levels[k].push_back(f);
  }
  return levels;
}

} // namespace

std::size_t FVector::f(int d) const {
  const int k = d + 1;
  if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(k)];
}

std::string FVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) os << ',';
    os << counts[i];
  }
  os << ')';
  return os.str();
}

SimplicialComplex::SimplicialComplex(int n) : n_(n) { check_ambient(n); }

SimplicialComplex SimplicialComplex::from_sorted_levels(int n,
                                                        std::vector<std::vector<Face>> levels) {
  SimplicialComplex k(n);
  k.levels_ = std::move(levels);
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const Face> facets) {
  check_ambient(n);
  std::unordered_set<std::uint64_t> seen;
  for (Face facet : facets) {
    check_within(facet, n);
    if (seen.contains(facet.bits())) continue;
    // Walk every submask of the facet.
    const std::uint64_t full = facet.bits();
    std::uint64_t sub = full;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (std::uint64_t b : seen) faces.push_back(Face::from_bits(b));
  return from_sorted_levels(n, group_by_size(std::move(faces)));
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::initializer_list<Face> facets) {
  return from_facets(n, std::span<const Face>(facets.begin(), facets.size()));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::span<const Face> faces) {
  check_ambient(n);
  for (Face f : faces) check_within(f, n);
  auto k = from_sorted_levels(n, group_by_size({faces.begin(), faces.end()}));
  for (Face f : faces) {
    bool closed = true;
    f.for_each_vertex([&](Vertex v) { closed = closed && k.contains(f.without(v)); });
    if (!closed) {
      throw std::invalid_argument("face family is not downward closed at " + f.to_string());
    }
  }
  return k;
}

SimplicialComplex SimplicialComplex::complete(int n, Face simplex) {
  return from_facets(n, {simplex});
}

SimplicialComplex SimplicialComplex::complete(int m) {
  return complete(m, Face::range(1, m));
}

bool SimplicialComplex::contains(Face f) const {
  const auto level = faces_of_size(f.size());
  return std::binary_search(level.begin(), level.end(), f);
}

std::span<const Face> SimplicialComplex::faces_of_size(int k) const {
  if (k < 0 || k >= static_cast<int>(levels_.size())) return {};
  return levels_[static_cast<std::size_t>(k)];
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  out.reserve(face_count());
  for (const auto& level : levels_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    for (Face f : levels_[k]) {
      bool maximal = true;
      if (k + 1 < levels_.size()) {
        for (Vertex v = 1; v <= n_ && maximal; ++v) {
          if (!f.contains(v) && contains(f.with(v))) maximal = false;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  for (const auto& level : levels_) fv.counts.push_back(level.size());
  return fv;
}

Face SimplicialComplex::vertex_set() const {
  Face out;
  for (Face v : faces_of_size(1)) out = out | v;
  return out;
}

SimplicialComplex SimplicialComplex::with_ambient(int n) const {
  check_ambient(n);
  if (vertex_set().max_vertex() > n) {
    throw std::out_of_range("with_ambient: complex uses labels beyond " + std::to_string(n));
  }
  auto copy = *this;
  copy.n_ = n;
  return copy;
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const Vertex> perm, int new_n) const {
  check_ambient(new_n);
  const Face used = vertex_set();
  if (static_cast<int>(perm.size()) < used.max_vertex()) {
    throw std::invalid_argument("relabeled: map does not cover every vertex");
  }
  Face image;
  used.for_each_vertex([&](Vertex v) {
    const Vertex w = perm[static_cast<std::size_t>(v - 1)];
    if (w < 1 || w > new_n) throw std::out_of_range("relabeled: image label out of range");
    if (image.contains(w)) throw std::invalid_argument("relabeled: map is not injective");
    image = image.with(w);
  });
  std::vector<Face> out;
  out.reserve(face_count());
  for (const auto& level : levels_) {
    for (Face f : level) {
      Face g;
      f.for_each_vertex([&](Vertex v) { g = g.with(perm[static_cast<std::size_t>(v - 1)]); });
      out.push_back(g);
    }
  }
  return from_sorted_levels(new_n, group_by_size(std::move(out)));
}

SimplicialComplex SimplicialComplex::translated(int offset) const {
  std::vector<Face> out;
  out.reserve(face_count());
  for (const auto& level : levels_) {
    for (Face f : level) out.push_back(f.translated(offset));
  }
  return from_sorted_levels(n_ + offset, group_by_size(std::move(out)));
}

SimplicialComplex SimplicialComplex::compacted() const {
  std::vector<Vertex> map(static_cast<std::size_t>(std::max(n_, 1)), 0);
  Vertex next = 0;
  vertex_set().for_each_vertex([&](Vertex v) { map[static_cast<std::size_t>(v - 1)] = ++next; });
  if (next == 0) return from_sorted_levels(0, levels_);
  return relabeled(map, next);
}

SimplicialComplex SimplicialComplex::skeleton_by_size(int k) const {
  auto copy = *this;
  if (k + 1 < static_cast<int>(copy.levels_.size())) {
    copy.levels_.resize(static_cast<std::size_t>(std::max(k + 1, 0)));
  }
  return copy;
}

std::string SimplicialComplex::to_string() const {
  if (is_empty()) return "<empty>";
  std::ostringstream os;
  const auto fs = facets();
  os << '<';
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) os << ' ';
    os << fs[i].to_string();
  }
  os << '>';
  return os.str();
}

bool is_shifted(const SimplicialComplex& k) {
  for (int size = 1; size <= k.dim() + 1; ++size) {
    for (Face f : k.faces_of_size(size)) {
      bool ok = true;
      f.for_each_vertex([&](Vertex v) {
        if (ok && v > 1 && !f.contains(v - 1)) ok = k.contains(f.without(v).with(v - 1));
      });
      if (!ok) return false;
    }
  }
  return true;
}

SimplicialComplex shifted_closure(int n, std::span<const Face> generators) {
  std::unordered_set<std::uint64_t> seen;
  std::deque<Face> queue;
  auto push = [&](Face f) {
    if (seen.insert(f.bits()).second) queue.push_back(f);
  };
  for (Face g : generators) {
    check_within(g, n);
    push(g);
  }
  while (!queue.empty()) {
    const Face f = queue.front();
    queue.pop_front();
    f.for_each_vertex([&](Vertex v) {
      push(f.without(v));
      if (v > 1 && !f.contains(v - 1)) push(f.without(v).with(v - 1));
    });
  }
  std::vector<Face> faces;
  for (std::uint64_t b : seen) faces.push_back(Face::from_bits(b));
  return SimplicialComplex::from_faces(n, faces);
}

} // namespace shiftkit
