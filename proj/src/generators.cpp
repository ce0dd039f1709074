#include "shiftkit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace shiftkit {
namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Face random_face(Rng& rng, int n, int size) {
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(size));
  return Face(std::span<const Vertex>(pool));
}

void require_options(int n, const RandomComplexOptions& options) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("random complex: bad vertex count");
  if (options.max_facets < 1 || options.max_facet_size < 1) {
    throw std::invalid_argument("random complex: options must be positive");
  }
}

} // namespace

SimplicialComplex random_complex(Rng& rng, int n, const RandomComplexOptions& options) {
  require_options(n, options);
  if (n == 0) return SimplicialComplex::from_facets(0, {Face{}});
  std::vector<Face> facets;
  const int count = uniform(rng, 1, options.max_facets);
  for (int i = 0; i < count; ++i) {
    const int size = uniform(rng, 1, std::min(n, options.max_facet_size));
    facets.push_back(random_face(rng, n, size));
  }
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex random_near_cone(Rng& rng, int n, const RandomComplexOptions& options) {
  require_options(n, options);
  if (n < 1) throw std::invalid_argument("random_near_cone: need at least one vertex");
  // Base L on {2..n}.
  std::vector<Face> base_facets{Face{}};
  if (n >= 2) {
    const auto inner = random_complex(rng, n - 1, options);
    for (Face f : inner.facets()) base_facets.push_back(f.translated(1));
  }
  const auto base = SimplicialComplex::from_facets(n, base_facets);

  std::vector<Face> facets;
  for (Face f : base.facets()) facets.push_back(f.with(1));
  const int extras = n >= 3 ? uniform(rng, 0, options.max_facets) : 0;
  for (int i = 0; i < extras; ++i) {
    const int size = uniform(rng, 2, std::min(n - 1, options.max_facet_size + 1));
    const Face b = random_face(rng, n - 1, size).translated(1);
    bool boundary_in_base = true;
    b.for_each_vertex([&](Vertex v) { boundary_in_base = boundary_in_base && base.contains(b.without(v)); });
    if (boundary_in_base) facets.push_back(b);
  }
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex random_shifted(Rng& rng, int n, const RandomComplexOptions& options) {
  const auto k = random_complex(rng, n, options);
  const auto gens = k.facets();
  return shifted_closure(n, gens);
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<SimplicialComplex> all_complexes(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("all_complexes: n must lie in 0..5");
  std::vector<Face> order;
  for (int k = 1; k <= n; ++k) {
    for (Face f : subsets_lex(n, k)) order.push_back(f);
  }
  std::vector<SimplicialComplex> out;
  std::vector<Face> chosen{Face{}};
  std::set<std::uint64_t> present{0};
  // Faces are decided in (size, lex) order, so every proper subset of a
  // face has been decided before the face itself.
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      out.push_back(SimplicialComplex::from_faces(n, chosen));
      return;
    }
    const Face f = order[idx];
    self(self, idx + 1);
    bool allowed = true;
    f.for_each_vertex([&](Vertex v) { allowed = allowed && present.contains(f.without(v).bits()); });
    if (!allowed) return;
    chosen.push_back(f);
    present.insert(f.bits());
    self(self, idx + 1);
    present.erase(f.bits());
    chosen.pop_back();
  };
  recurse(recurse, 0);
  return out;
}

std::vector<std::uint64_t> canonical_key(const SimplicialComplex& k) {
  const auto c = k.compacted();
  const int m = c.num_vertices();
  std::vector<Vertex> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> best;
  bool first = true;
  do {
    std::vector<std::uint64_t> key;
    for (Face f : c.relabeled(perm, std::max(m, c.n())).faces()) key.push_back(f.bits());
    if (first || key < best) best = std::move(key);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SimplicialComplex> complex_classes(int n) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<SimplicialComplex> out;
  for (const auto& k : all_complexes(n)) {
    const auto compact = k.compacted();
    auto key = canonical_key(compact);
    if (seen.insert(key).second) out.push_back(compact.with_ambient(compact.num_vertices()));
  }
  return out;
}

} // namespace shiftkit
