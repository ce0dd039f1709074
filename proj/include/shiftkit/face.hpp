#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shiftkit {

/// Vertex labels are 1-based; label v is stored in bit v-1.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A finite subset of [n], n <= 64, stored as a single machine word.
class Face {
public:
  constexpr Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::span<const Vertex> vertices);

  static constexpr Face from_bits(std::uint64_t bits) {
    Face f;
    f.bits_ = bits;
    return f;
  }
  /// The full simplex [n] = {1, ..., n}.
  static Face range(Vertex first, Vertex last);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertices && (bits_ >> (v - 1)) & 1U;
  }
  constexpr bool is_subset_of(Face other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Face other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Smallest / largest vertex; 0 for the empty face.
  constexpr Vertex min_vertex() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  constexpr Vertex max_vertex() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
  }

  Face with(Vertex v) const;
  Face without(Vertex v) const;

  /// Every vertex moved by `offset` (labels must stay within 1..64).
  Face translated(int offset) const;

  std::vector<Vertex> vertices() const;
  std::string to_string() const;

  template <typename Fn> void for_each_vertex(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest) + 1);
    }
  }

  friend constexpr Face operator|(Face a, Face b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr Face operator&(Face a, Face b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr Face operator-(Face a, Face b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr Face operator^(Face a, Face b) { return from_bits(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Face a, Face b) = default;

  /// Total order: by cardinality, then lexicographically.
  friend constexpr std::strong_ordering operator<=>(Face a, Face b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    return (a.bits_ & diff & (~diff + 1)) != 0 ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
  }

private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on faces of equal size: min(S xor T) lies in S.
/// Throws std::invalid_argument when the cardinalities differ.
bool lex_less(Face s, Face t);

/// Componentwise domination s_i <= t_i of the sorted elements.
/// Throws std::invalid_argument when the cardinalities differ.
bool dominates(Face s, Face t);

/// The j lexicographically least elements of `s` (j <= |s|).
Face init(Face s, int j);

/// All T in [n] with |T| = |S| + i and init_{|S|}(T) = S, in lex order.
/// Throws for i <= 0; returns an empty list when no such T fits in [n].
std::vector<Face> interval(Face s, int i, int n);

/// All k-subsets of [n] in lex order.
std::vector<Face> subsets_lex(int n, int k);

/// Calls `fn(face)` for the k-subsets of [n] in lex order until it returns false.
void for_each_subset_lex(int n, int k, const std::function<bool(Face)>& fn);

/// Number of elements of `t` strictly smaller than `v`.
inline int count_below(Face t, Vertex v) {
  const std::uint64_t mask = v <= 1 ? 0 : (v > 64 ? ~0ULL : (1ULL << (v - 1)) - 1);
  return std::popcount(t.bits() & mask);
}

/// Number of elements of `t` strictly greater than `v`.
inline int count_above(Face t, Vertex v) {
  const std::uint64_t mask = v >= 64 ? 0ULL : ~((1ULL << v) - 1);
  return std::popcount(t.bits() & mask);
}

struct FaceHash {
  std::size_t operator()(Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits());
  }
};

} // namespace shiftkit
