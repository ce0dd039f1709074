#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftkit/complex.hpp"
#include "shiftkit/shift.hpp"

namespace shiftkit {

// Constructions. Disjoint constructions place the second operand's vertices
// above the first operand's ambient range, so their supports never overlap.

/// K ∪̇ L on ambient n_K + n_L.
SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l);
/// Plain union on shared labels; ambient is the larger of the two.
SimplicialComplex union_of(const SimplicialComplex& k, const SimplicialComplex& l);
/// Plain intersection on shared labels.
SimplicialComplex intersection_of(const SimplicialComplex& k, const SimplicialComplex& l);
/// K * L = {S ∪ T} on ambient n_K + n_L.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// v * K for a new vertex inserted at label `apex` (1 <= apex <= n+1);
/// labels >= apex move up by one. The empty complex has the empty cone.
SimplicialComplex cone(const SimplicialComplex& k, Vertex apex = 1);
/// K * {{n+1}, {n+2}}.
SimplicialComplex suspension(const SimplicialComplex& k);
/// lk(S,K) = {T in K : T ∩ S = ∅, T ∪ S in K}. Throws if S is not in K.
SimplicialComplex link(const SimplicialComplex& k, Face s);
/// ast(S,K) = {T in K : T ∩ S = ∅}. Throws if S is not in K.
SimplicialComplex antistar(const SimplicialComplex& k, Face s);
/// K and L glued along sigma_k in K and sigma_l in L: the i-th vertex of
/// sigma_l is identified with the i-th vertex of sigma_k, the remaining
/// vertices of L go above n_K. The shared part is exactly <sigma_k>.
SimplicialComplex clique_sum(const SimplicialComplex& k, const SimplicialComplex& l,
                             Face sigma_k, Face sigma_l);

enum class CombineKind { DisjointUnion, Union, Join, Cone, Suspension, Link, Antistar };

struct CombineArgs {
  CombineKind kind = CombineKind::DisjointUnion;
  Vertex apex = 1;  // Cone
  Face face;        // Link, Antistar
};

/// Dispatches to the constructions above. Binary kinds need `l`; unary
/// kinds reject it. Throws std::invalid_argument on an arity mismatch.
SimplicialComplex combine(const CombineArgs& args, const SimplicialComplex& k,
                          const SimplicialComplex* l = nullptr);

std::optional<CombineKind> parse_combine_kind(const std::string& name);

// Shifted-union formulas. All take shifted complexes and use no linear
// algebra.

/// D(S) = |I¹_{init_{|S|-1}(S)}(n) ∩ Δ|. Throws if Δ is not shifted, S is
/// empty, or either does not fit in [n].
std::size_t d_value(const SimplicialComplex& delta, Face s, int n);

/// Δ(K ∪̇ L) from Δ(K) and Δ(L) by the gap test, on ambient n.
SimplicialComplex disjoint_union_shift(const SimplicialComplex& delta_k,
                                       const SimplicialComplex& delta_l, int n);

/// K ⊔ L by recursion on vertex 1 through links and antistars.
SimplicialComplex shifted_union_recursive(const SimplicialComplex& k,
                                          const SimplicialComplex& l);

/// Δ(K ∪_σ L) for a shared d-simplex σ, from Δ(K), Δ(L) and d alone.
/// Throws if d exceeds the dimension of either input.
SimplicialComplex clique_sum_shift(const SimplicialComplex& delta_k,
                                   const SimplicialComplex& delta_l, int d, int n);

/// Both sides of the additive interval formula with exponent dim(K ∩ L) + 2.
struct CountPair {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// Δ is computed for K ∪ L, K and L on the common ambient range.
CountPair union_interval_check(const SimplicialComplex& k, const SimplicialComplex& l, Face a,
                               std::uint64_t seed = kDefaultSeed);
/// One CountPair per entry of `as`, sharing the three shifts.
std::vector<CountPair> union_interval_check(const SimplicialComplex& k,
                                            const SimplicialComplex& l,
                                            std::span<const Face> as,
                                            std::uint64_t seed = kDefaultSeed);

// Near cones.

struct NearConeCertificate {
  std::vector<Vertex> apexes;
  /// chain[0] = K, chain[j] = ast(apexes[j-1], chain[j-1]).
  std::vector<SimplicialComplex> chain;
  std::size_t length() const { return apexes.size(); }
};

struct NearConeAnalysis {
  NearConeCertificate certificate;
  /// First chain level with no qualifying vertex; empty when the chain ran
  /// out of vertices.
  std::optional<std::size_t> refused_at;
};

/// Greedy extraction, taking the smallest qualifying vertex at each level.
NearConeAnalysis near_cone_analyze(const SimplicialComplex& k);

/// Checks the chain relations of a certificate against K.
bool is_valid_certificate(const SimplicialComplex& k, const NearConeCertificate& cert);

/// Faces of Δ(K) through 1 equal 1 * (Δ(lk(v,K)) + 1).
/// Throws std::invalid_argument if K is not a near cone w.r.t. v.
bool near_cone_decomposition_check(const SimplicialComplex& k, Vertex v,
                                   std::uint64_t seed = kDefaultSeed);

/// For each j <= i, the faces of Δ(K) with minimum j equal
/// j * (Δ(lk(v_j, K(j-1))) + j). Throws on an invalid certificate.
bool near_cone_certificate_check(const SimplicialComplex& k, const NearConeCertificate& cert,
                                 std::uint64_t seed = kDefaultSeed);

/// Top faces of Δ(K*L) avoiding [i] against the product of the same counts
/// for Δ(K) and Δ(L). Requires 1 <= i <= |(K*L)_0|.
CountPair join_top_count_check(const SimplicialComplex& k, const SimplicialComplex& l, int i,
                               std::uint64_t seed = kDefaultSeed);

/// |{S in Δ : [i] ∩ S = ∅, |S| = dim Δ + 1}|.
std::size_t top_faces_avoiding(const SimplicialComplex& delta, int i);

// Lex order on complexes: K <=_L L iff for every r > 0 the lex-first
// r-dimensional face of K △ L, when there is one, belongs to K.

enum class LexComparison {
  Equal,
  Less,
  Greater,
  /// Both K <=_L L and L <=_L K although K != L (differences in vertices only).
  Tied,
  Incomparable,
};

bool lex_leq(const SimplicialComplex& k, const SimplicialComplex& l);
LexComparison compare_lex(const SimplicialComplex& k, const SimplicialComplex& l);
std::string to_string(LexComparison c);

/// Faces of K not in L.
std::vector<Face> face_difference(const SimplicialComplex& k, const SimplicialComplex& l);

} // namespace shiftkit
