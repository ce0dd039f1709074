#include "shiftkit/face.hpp"

#include <sstream>
#include <stdexcept>

namespace shiftkit {
namespace {

void check_label(Vertex v) {
  if (v < 1 || v > kMaxVertices) {
    throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1..64");
  }
}

void require_same_size(Face s, Face t, const char* what) {
  if (s.size() != t.size()) {
    throw std::invalid_argument(std::string(what) + ": faces of unequal cardinality");
  }
}

} // namespace

Face::Face(std::initializer_list<Vertex> vertices)
    : Face(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Face::Face(std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    check_label(v);
    bits_ |= 1ULL << (v - 1);
  }
}

Face Face::range(Vertex first, Vertex last) {
  Face f;
  for (Vertex v = first; v <= last; ++v) {
    check_label(v);
    f.bits_ |= 1ULL << (v - 1);
  }
  return f;
}

Face Face::with(Vertex v) const {
  check_label(v);
  return from_bits(bits_ | (1ULL << (v - 1)));
}

Face Face::without(Vertex v) const {
  check_label(v);
  return from_bits(bits_ & ~(1ULL << (v - 1)));
}

Face Face::translated(int offset) const {
  if (bits_ == 0 || offset == 0) return *this;
  check_label(min_vertex() + offset);
  check_label(max_vertex() + offset);
  return offset > 0 ? from_bits(bits_ << offset) : from_bits(bits_ >> -offset);
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_vertex([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_vertex([&](Vertex v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

bool lex_less(Face s, Face t) {
  require_same_size(s, t, "lex_less");
  return (s <=> t) < 0;
}

bool dominates(Face s, Face t) {
  require_same_size(s, t, "dominates");
  const auto sv = s.vertices();
  const auto tv = t.vertices();
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (sv[i] > tv[i]) return false;
  }
  return true;
}

Face init(Face s, int j) {
  if (j < 0 || j > s.size()) {
    throw std::invalid_argument("init: j must lie in 0..|S|");
  }
  std::uint64_t out = 0;
  std::uint64_t rest = s.bits();
  for (int taken = 0; taken < j; ++taken) {
    const std::uint64_t low = rest & (~rest + 1);
    out |= low;
    rest ^= low;
  }
  return Face::from_bits(out);
}

std::vector<Face> interval(Face s, int i, int n) {
  if (i <= 0) throw std::invalid_argument("interval: i must be positive");
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("interval: n outside 0..64");
  if (s.max_vertex() > n) throw std::invalid_argument("interval: S not contained in [n]");
  const int start = s.max_vertex();
  const int room = n - start;
  std::vector<Face> out;
  if (i > room) return out;
  for_each_subset_lex(room, i, [&](Face tail) {
    out.push_back(s | tail.translated(start));
    return true;
  });
  return out;
}

void for_each_subset_lex(int n, int k, const std::function<bool(Face)>& fn) {
  if (k < 0 || n < 0 || k > n) return;
  if (n > kMaxVertices) throw std::out_of_range("subset enumeration beyond 64 vertices");
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::uint64_t bits = 0;
    for (int v : idx) bits |= 1ULL << (v - 1);
    if (!fn(Face::from_bits(bits))) return;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<Face> subsets_lex(int n, int k) {
  std::vector<Face> out;
  for_each_subset_lex(n, k, [&](Face f) {
    out.push_back(f);
    return true;
  });
  return out;
}

} // namespace shiftkit
