#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shiftkit/face.hpp"

namespace shiftkit {

/// Face counts by cardinality: counts[k] is the number of faces with k
/// vertices, i.e. f_{k-1}.
struct FVector {
  std::vector<std::size_t> counts;

  /// f_d, zero beyond the stored range; d >= -1.
  std::size_t f(int d) const;
  std::string to_string() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// A downward-closed family of faces on the ambient vertex set [n].
///
/// Faces are grouped by cardinality and kept in lex order inside each group,
/// so membership and initial-segment queries are binary searches. Two
/// complexes compare equal when they have the same faces; the ambient count
/// is carried along but is not part of the identity.
class SimplicialComplex {
public:
  /// The complex with no faces at all, on ambient [n].
  explicit SimplicialComplex(int n = 0);

  /// Downward closure of `facets`. An empty list gives the empty complex;
  /// the single facet {} gives the complex {∅}.
  static SimplicialComplex from_facets(int n, std::span<const Face> facets);
  static SimplicialComplex from_facets(int n, std::initializer_list<Face> facets);

  /// Builds a complex from an explicit face family without closing it.
  /// Throws std::invalid_argument if the family is not downward closed.
  static SimplicialComplex from_faces(int n, std::span<const Face> faces);

  /// All subsets of `simplex`.
  static SimplicialComplex complete(int n, Face simplex);
  /// All subsets of [m], on ambient [m].
  static SimplicialComplex complete(int m);

  int n() const { return n_; }
  bool is_empty() const { return levels_.empty(); }
  /// Largest face cardinality minus one: -1 for {∅}, -2 for the empty complex.
  int dim() const { return static_cast<int>(levels_.size()) - 2; }

  bool contains(Face f) const;
  /// Faces with exactly k vertices, in lex order.
  std::span<const Face> faces_of_size(int k) const;
  /// All faces ordered by (cardinality, lex).
  std::vector<Face> faces() const;
  std::vector<Face> facets() const;
  std::size_t face_count() const;

  FVector f_vector() const;
  /// Union of all faces.
  Face vertex_set() const;
  int num_vertices() const { return static_cast<int>(faces_of_size(1).size()); }

  /// Same faces on a different ambient vertex count.
  SimplicialComplex with_ambient(int n) const;
  /// Every label v replaced by perm[v-1]; perm must be injective into 1..64.
  SimplicialComplex relabeled(std::span<const Vertex> perm, int new_n) const;
  /// Every label moved up by `offset`; ambient grows by the same amount.
  SimplicialComplex translated(int offset) const;
  /// Vertex set relabeled order-preservingly onto [m], m = number of vertices.
  SimplicialComplex compacted() const;
  /// Faces of cardinality at most k.
  SimplicialComplex skeleton_by_size(int k) const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.levels_ == b.levels_;
  }

private:
  static SimplicialComplex from_sorted_levels(int n, std::vector<std::vector<Face>> levels);

  int n_ = 0;
  std::vector<std::vector<Face>> levels_;
};

/// Closed under replacing a vertex of a face by a smaller unused vertex.
bool is_shifted(const SimplicialComplex& k);

/// Smallest face family containing `generators` that is closed under
/// subsets and under domination. Built without any linear algebra.
SimplicialComplex shifted_closure(int n, std::span<const Face> generators);

} // namespace shiftkit
