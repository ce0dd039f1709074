#include "shiftkit/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "shiftkit/homology.hpp"

namespace shiftkit {
namespace {

void require_face(const SimplicialComplex& k, Face s, const char* what) {
  if (!k.contains(s)) {
    throw std::invalid_argument(std::string(what) + ": face " + s.to_string() +
                                " is not in the complex");
  }
}

void require_shifted(const SimplicialComplex& k, const char* what) {
  if (!is_shifted(k)) throw std::invalid_argument(std::string(what) + ": input is not shifted");
}

// |I¹_P ∩ X| = #{t > max(P) : P ∪ t in X}.
std::size_t interval_one_count(const SimplicialComplex& x, Face p) {
  std::size_t count = 0;
  for (Vertex t = p.max_vertex() + 1; t <= x.n(); ++t) {
    if (x.contains(p.with(t))) ++count;
  }
  return count;
}

// Builds the shifted complex whose faces S = P ∪ t satisfy
// t - max(P) <= bound(P), level by level from {∅}.
template <typename Bound>
SimplicialComplex gap_build(int n, Bound bound) {
  std::vector<Face> faces{Face{}};
  std::vector<Face> level{Face{}};
  while (!level.empty()) {
    std::vector<Face> next;
    for (Face p : level) {
      const std::ptrdiff_t b = bound(p);
      if (b <= 0) continue;
      const Vertex top = p.max_vertex();
      if (top + b > n) {
        throw std::invalid_argument("gap test produces faces beyond the ambient range " +
                                    std::to_string(n));
      }
      for (Vertex t = top + 1; t <= top + b; ++t) next.push_back(p.with(t));
    }
    faces.insert(faces.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return SimplicialComplex::from_faces(n, faces);
}

SimplicialComplex shift_down(const SimplicialComplex& k) {
  return k.is_empty() ? SimplicialComplex(std::max(k.n() - 1, 0)) : k.translated(-1);
}

using FaceKey = std::vector<std::uint64_t>;

FaceKey key_of(const SimplicialComplex& k) {
  FaceKey key;
  for (Face f : k.faces()) key.push_back(f.bits());
  return key;
}

using SqcupCache = std::map<std::pair<FaceKey, FaceKey>, SimplicialComplex>;

SimplicialComplex sqcup(const SimplicialComplex& k, const SimplicialComplex& l,
                        SqcupCache& cache) {
  if (k.is_empty() || k.num_vertices() == 0) return l.is_empty() ? k : l;
  if (l.is_empty() || l.num_vertices() == 0) return k;

  auto key = std::make_pair(key_of(k), key_of(l));
  if (const auto it = cache.find(key); it != cache.end()) return it->second;

  const Face one{1};
  const auto links = sqcup(shift_down(link(k, one)), shift_down(link(l, one)), cache);
  const auto rest = sqcup(shift_down(antistar(k, one)), shift_down(antistar(l, one)), cache);

  const int vertices = k.num_vertices() + l.num_vertices();
  std::vector<Face> faces{Face{}};
  for (Vertex v = 1; v <= vertices; ++v) faces.push_back(Face{v});
  for (Face t : links.faces()) {
    if (!t.empty()) faces.push_back(t.translated(1).with(1));
  }
  for (Face t : rest.faces()) {
    if (t.size() >= 2) faces.push_back(t.translated(1));
  }
  auto out = SimplicialComplex::from_faces(vertices, faces);
  cache.emplace(std::move(key), out);
  return out;
}

SimplicialComplex shift_of(const SimplicialComplex& k, std::uint64_t seed) {
  return algebraic_shift(k, seed);
}

bool same_faces(std::vector<Face> a, std::vector<Face> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Faces of Δ with minimum j against j * (Δ(lk) + j).
bool min_slice_matches(const SimplicialComplex& delta, Vertex j,
                       const SimplicialComplex& link_shift) {
  std::vector<Face> actual;
  for (Face s : delta.faces()) {
    if (!s.empty() && s.min_vertex() == j) actual.push_back(s);
  }
  std::vector<Face> expected;
  for (Face t : link_shift.faces()) expected.push_back(t.translated(j).with(j));
  return same_faces(std::move(actual), std::move(expected));
}

} // namespace

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int n = k.n() + l.n();
  std::vector<Face> faces = k.faces();
  for (Face f : l.faces()) faces.push_back(f.translated(k.n()));
  return SimplicialComplex::from_faces(n, faces);
}

SimplicialComplex union_of(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int n = std::max(k.n(), l.n());
  std::vector<Face> faces = k.faces();
  const auto more = l.faces();
  faces.insert(faces.end(), more.begin(), more.end());
  return SimplicialComplex::from_faces(n, faces);
}

SimplicialComplex intersection_of(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<Face> faces;
  for (Face f : k.faces()) {
    if (l.contains(f)) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(std::max(k.n(), l.n()), faces);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int n = k.n() + l.n();
  std::vector<Face> facets;
  for (Face a : k.facets()) {
    for (Face b : l.facets()) facets.push_back(a | b.translated(k.n()));
  }
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex) {
  const int n = k.n();
  if (apex < 1 || apex > n + 1) {
    throw std::invalid_argument("cone apex must lie in 1.." + std::to_string(n + 1));
  }
  std::vector<Vertex> map(static_cast<std::size_t>(std::max(n, 1)));
  for (Vertex v = 1; v <= n; ++v) map[static_cast<std::size_t>(v - 1)] = v < apex ? v : v + 1;
  const auto moved = k.relabeled(map, n + 1);
  std::vector<Face> facets;
  for (Face f : moved.facets()) facets.push_back(f.with(apex));
  return SimplicialComplex::from_facets(n + 1, facets);
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  return join(k, SimplicialComplex::from_facets(2, {Face{1}, Face{2}}));
}

SimplicialComplex link(const SimplicialComplex& k, Face s) {
  require_face(k, s, "link");
  std::vector<Face> faces;
  for (Face t : k.faces()) {
    if (!t.intersects(s) && k.contains(t | s)) faces.push_back(t);
  }
  return SimplicialComplex::from_faces(k.n(), faces);
}

SimplicialComplex antistar(const SimplicialComplex& k, Face s) {
  require_face(k, s, "antistar");
  std::vector<Face> faces;
  for (Face t : k.faces()) {
    if (!t.intersects(s)) faces.push_back(t);
  }
  return SimplicialComplex::from_faces(k.n(), faces);
}

SimplicialComplex clique_sum(const SimplicialComplex& k, const SimplicialComplex& l,
                             Face sigma_k, Face sigma_l) {
  if (sigma_k.size() != sigma_l.size()) {
    throw std::invalid_argument("clique_sum: gluing simplices differ in size");
  }
  require_face(k, sigma_k, "clique_sum");
  require_face(l, sigma_l, "clique_sum");
  const auto targets = sigma_k.vertices();
  std::vector<Vertex> map(static_cast<std::size_t>(std::max(l.n(), 1)), 0);
  std::size_t i = 0;
  sigma_l.for_each_vertex([&](Vertex v) { map[static_cast<std::size_t>(v - 1)] = targets[i++]; });
  Vertex next = k.n();
  for (Vertex v = 1; v <= l.n(); ++v) {
    if (!sigma_l.contains(v)) map[static_cast<std::size_t>(v - 1)] = ++next;
  }
  const auto moved = l.relabeled(map, next);
  return union_of(k.with_ambient(next), moved);
}

SimplicialComplex combine(const CombineArgs& args, const SimplicialComplex& k,
                          const SimplicialComplex* l) {
  const bool binary = args.kind == CombineKind::DisjointUnion ||
                      args.kind == CombineKind::Union || args.kind == CombineKind::Join;
  if (binary != (l != nullptr)) {
    throw std::invalid_argument(binary ? "operation needs two complexes"
                                       : "operation takes a single complex");
  }
  switch (args.kind) {
    case CombineKind::DisjointUnion: return disjoint_union(k, *l);
    case CombineKind::Union: return union_of(k, *l);
    case CombineKind::Join: return join(k, *l);
    case CombineKind::Cone: return cone(k, args.apex);
    case CombineKind::Suspension: return suspension(k);
    case CombineKind::Link: return link(k, args.face);
    case CombineKind::Antistar: return antistar(k, args.face);
  }
  throw std::logic_error("unhandled combine kind");
}

std::optional<CombineKind> parse_combine_kind(const std::string& name) {
  static const std::map<std::string, CombineKind> names{
      {"disjoint-union", CombineKind::DisjointUnion},
      {"union", CombineKind::Union},
      {"join", CombineKind::Join},
      {"cone", CombineKind::Cone},
      {"suspension", CombineKind::Suspension},
      {"link", CombineKind::Link},
      {"antistar", CombineKind::Antistar},
  };
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::size_t d_value(const SimplicialComplex& delta, Face s, int n) {
  require_shifted(delta, "d_value");
  if (s.empty()) throw std::invalid_argument("d_value: S must be nonempty");
  if (s.max_vertex() > n || delta.vertex_set().max_vertex() > n) {
    throw std::invalid_argument("d_value: supports do not fit in [n]");
  }
  return interval_one_count(delta.with_ambient(n), init(s, s.size() - 1));
}

SimplicialComplex disjoint_union_shift(const SimplicialComplex& delta_k,
                                       const SimplicialComplex& delta_l, int n) {
  require_shifted(delta_k, "disjoint_union_shift");
  require_shifted(delta_l, "disjoint_union_shift");
  if (delta_k.is_empty()) return delta_l.with_ambient(n);
  if (delta_l.is_empty()) return delta_k.with_ambient(n);
  return gap_build(n, [&](Face p) {
    return static_cast<std::ptrdiff_t>(interval_one_count(delta_k, p) +
                                       interval_one_count(delta_l, p));
  });
}

SimplicialComplex shifted_union_recursive(const SimplicialComplex& k,
                                          const SimplicialComplex& l) {
  require_shifted(k, "shifted_union_recursive");
  require_shifted(l, "shifted_union_recursive");
  SqcupCache cache;
  const auto out = sqcup(k, l, cache);
  return out.with_ambient(std::max(out.n(), k.n() + l.n()));
}

SimplicialComplex clique_sum_shift(const SimplicialComplex& delta_k,
                                   const SimplicialComplex& delta_l, int d, int n) {
  require_shifted(delta_k, "clique_sum_shift");
  require_shifted(delta_l, "clique_sum_shift");
  if (d < -1) throw std::invalid_argument("clique_sum_shift: d must be at least -1");
  if (d > delta_k.dim() || d > delta_l.dim()) {
    throw std::invalid_argument("clique_sum_shift: shared simplex dimension " +
                                std::to_string(d) + " exceeds an input dimension");
  }
  const auto sigma = SimplicialComplex::complete(d + 1);
  return gap_build(n, [&](Face p) {
    return static_cast<std::ptrdiff_t>(interval_one_count(delta_k, p) +
                                       interval_one_count(delta_l, p)) -
           static_cast<std::ptrdiff_t>(interval_one_count(sigma, p));
  });
}

CountPair union_interval_check(const SimplicialComplex& k, const SimplicialComplex& l, Face a,
                               std::uint64_t seed) {
  const Face as[] = {a};
  return union_interval_check(k, l, as, seed).front();
}

std::vector<CountPair> union_interval_check(const SimplicialComplex& k,
                                            const SimplicialComplex& l,
                                            std::span<const Face> as, std::uint64_t seed) {
  if (k.is_empty() || l.is_empty()) {
    throw std::invalid_argument("union_interval_check: both complexes must be nonempty");
  }
  const int n = std::max(k.n(), l.n());
  for (Face a : as) {
    if (a.max_vertex() > n) throw std::invalid_argument("union_interval_check: A not in [n]");
  }
  const int d = intersection_of(k, l).dim();
  const auto delta_u = shift_of(union_of(k, l), seed);
  const auto delta_k = shift_of(k.with_ambient(n), seed);
  const auto delta_l = shift_of(l.with_ambient(n), seed);
  std::vector<CountPair> out;
  for (Face a : as) {
    const auto cells = interval(a, d + 2, n);
    auto count = [&](const SimplicialComplex& delta) {
      return static_cast<std::size_t>(
          std::count_if(cells.begin(), cells.end(), [&](Face f) { return delta.contains(f); }));
    };
    out.push_back({count(delta_u), count(delta_k) + count(delta_l)});
  }
  return out;
}

NearConeAnalysis near_cone_analyze(const SimplicialComplex& k) {
  NearConeAnalysis out;
  out.certificate.chain.push_back(k);
  while (true) {
    const auto& current = out.certificate.chain.back();
    const Face vertices = current.vertex_set();
    if (vertices.empty()) break;
    Vertex apex = 0;
    vertices.for_each_vertex([&](Vertex v) {
      if (apex == 0 && is_near_cone(current, v)) apex = v;
    });
    if (apex == 0) {
      out.refused_at = out.certificate.chain.size() - 1;
      break;
    }
    auto next = antistar(current, Face{apex});
    out.certificate.apexes.push_back(apex);
    out.certificate.chain.push_back(std::move(next));
  }
  return out;
}

bool is_valid_certificate(const SimplicialComplex& k, const NearConeCertificate& cert) {
  if (cert.chain.size() != cert.apexes.size() + 1 || cert.chain.front() != k) return false;
  for (std::size_t j = 1; j < cert.chain.size(); ++j) {
    const auto& prev = cert.chain[j - 1];
    const Vertex v = cert.apexes[j - 1];
    if (!prev.vertex_set().contains(v) || !is_near_cone(prev, v)) return false;
    if (cert.chain[j] != antistar(prev, Face{v})) return false;
  }
  return true;
}

bool near_cone_decomposition_check(const SimplicialComplex& k, Vertex v, std::uint64_t seed) {
  if (!k.vertex_set().contains(v) || !is_near_cone(k, v)) {
    throw std::invalid_argument("near_cone_decomposition_check: not a near cone with respect to " +
                                std::to_string(v));
  }
  const auto delta = shift_of(k, seed);
  const auto lk = shift_of(link(k, Face{v}).compacted(), seed);
  return min_slice_matches(delta, 1, lk);
}

bool near_cone_certificate_check(const SimplicialComplex& k, const NearConeCertificate& cert,
                                 std::uint64_t seed) {
  if (!is_valid_certificate(k, cert)) {
    throw std::invalid_argument("near_cone_certificate_check: invalid certificate");
  }
  if (cert.length() == 0) return true;
  const auto delta = shift_of(k, seed);
  for (std::size_t j = 1; j <= cert.length(); ++j) {
    const auto lk = link(cert.chain[j - 1], Face{cert.apexes[j - 1]}).compacted();
    if (!min_slice_matches(delta, static_cast<Vertex>(j), shift_of(lk, seed))) return false;
  }
  return true;
}

std::size_t top_faces_avoiding(const SimplicialComplex& delta, int i) {
  const Face prefix = Face::range(1, i);
  std::size_t count = 0;
  for (Face s : delta.faces_of_size(delta.dim() + 1)) {
    if (!s.intersects(prefix)) ++count;
  }
  return count;
}

CountPair join_top_count_check(const SimplicialComplex& k, const SimplicialComplex& l, int i,
                               std::uint64_t seed) {
  if (k.is_empty() || l.is_empty()) {
    throw std::invalid_argument("join_top_count_check: both complexes must be nonempty");
  }
  const auto joined = join(k, l);
  if (i < 1 || i > joined.num_vertices()) {
    throw std::invalid_argument("join_top_count_check: i must lie in 1.." +
                                std::to_string(joined.num_vertices()));
  }
  const std::size_t lhs = top_faces_avoiding(shift_of(joined, seed), i);
  const std::size_t rhs =
      top_faces_avoiding(shift_of(k, seed), i) * top_faces_avoiding(shift_of(l, seed), i);
  return {lhs, rhs};
}

bool lex_leq(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int top = std::max(k.dim(), l.dim());
  for (int r = 1; r <= top; ++r) {
    const auto a = k.faces_of_size(r + 1);
    const auto b = l.faces_of_size(r + 1);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end() && *ia == *ib) {
      ++ia;
      ++ib;
    }
    if (ia == a.end() && ib == b.end()) continue;
    // The first face of the symmetric difference is the smaller of the
    // two current heads.
    const bool in_k = ib == b.end() || (ia != a.end() && *ia < *ib);
    if (!in_k) return false;
  }
  return true;
}

LexComparison compare_lex(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k == l) return LexComparison::Equal;
  const bool le = lex_leq(k, l);
  const bool ge = lex_leq(l, k);
  if (le && ge) return LexComparison::Tied;
  if (le) return LexComparison::Less;
  if (ge) return LexComparison::Greater;
  return LexComparison::Incomparable;
}

std::string to_string(LexComparison c) {
  switch (c) {
    case LexComparison::Equal: return "equal";
    case LexComparison::Less: return "less";
    case LexComparison::Greater: return "greater";
    case LexComparison::Tied: return "tied";
    case LexComparison::Incomparable: return "incomparable";
  }
  return "unknown";
}

std::vector<Face> face_difference(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<Face> out;
  for (Face f : k.faces()) {
    if (!l.contains(f)) out.push_back(f);
  }
  return out;
}

} // namespace shiftkit
