#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftkit/complex.hpp"
#include "shiftkit/field.hpp"

namespace shiftkit {

struct SignedFace {
  Face face;
  int sign = 1;
  friend bool operator==(const SignedFace&, const SignedFace&) = default;
};

/// e_T ⌊ e_S: zero unless T ⊆ S, otherwise (-1)^a e_{S \ T} with
/// a = |{(s,t) in S x T : s not in T, t < s}|.
std::optional<SignedFace> interior_product(Face t, Face s);

/// Parity of |{(s,t) in S x T : t < s}|, the sign of e_S ∧ e_T = ± e_{S ∪ T}.
int wedge_parity(Face s, Face t);

/// Sparse element of the exterior algebra ⋀V over a prime field.
class ExteriorElement {
public:
  explicit ExteriorElement(PrimeField field) : field_(field) {}
  static ExteriorElement basis(PrimeField field, Face s, Residue coeff = 1);

  void add_term(Face s, Residue coeff);
  Residue coefficient(Face s) const;
  const std::map<Face, Residue>& terms() const { return terms_; }
  const PrimeField& field() const { return field_; }

  ExteriorElement operator+(const ExteriorElement& other) const;
  ExteriorElement scaled(Residue c) const;
  ExteriorElement wedge(const ExteriorElement& other) const;
  /// this ⌊ other, extended bilinearly from e_T ⌊ e_S.
  ExteriorElement interior(const ExteriorElement& other) const;

  std::string to_string() const;
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

private:
  PrimeField field_;
  std::map<Face, Residue> terms_;  // zero coefficients are never stored
};

/// Coordinates over the faces of one cardinality of a carrier complex.
struct ChainVector {
  int degree = 0;
  std::vector<Residue> coords;

  ExteriorElement to_exterior(const SimplicialComplex& k, const PrimeField& field) const;
  /// Throws std::invalid_argument when `x` has support outside K_{degree-1}.
  static ChainVector from_exterior(const SimplicialComplex& k, int degree,
                                   const ExteriorElement& x);
};

/// Matrix of g⌊ : ⋀^k K -> ⋀^{k-1} K in the e_S bases (rows: faces of size
/// k-1, columns: faces of size k, both in lex order). `g` holds the
/// coefficient of e_v at index v-1 and must cover the ambient vertex set.
FieldMatrix boundary_matrix(const SimplicialComplex& k, std::span<const Residue> g, int degree,
                            const PrimeField& field = PrimeField{});

/// Reduced Betti numbers; values[d+1] = β̃_d for d = -1..dim.
struct BettiVector {
  std::vector<std::size_t> values;

  std::size_t beta(int d) const;
  std::string to_string() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// β̃ from ranks of the boundary maps of a nonempty complex.
BettiVector betti_direct(const SimplicialComplex& k, const PrimeField& field = PrimeField{});

/// β̃_d = |{S in Δ_d : S ∪ {1} not in Δ}| for a shifted complex.
/// Throws std::invalid_argument for non-shifted input.
BettiVector betti_from_shifted(const SimplicialComplex& delta);

/// For every j in S in K, (S ∪ {v}) \ {j} is also in K.
bool is_near_cone(const SimplicialComplex& k, Vertex v);

/// Matrices of the maps U and D of a near cone with respect to vertex 1,
/// indexed by face cardinality. U sends (⋀K, e_1⌊) to (⋀K, e⌊) and D sends
/// (⋀K, e⌊) to (⋀K, f⌊), where e = Σ e_i and f = Σ α_i e_i over K_0.
struct SarkariaMaps {
  std::vector<FieldMatrix> u;
  std::vector<FieldMatrix> d;
};

/// `alphas[v-1]` is the coefficient α_v; every vertex of K needs α_v != 0.
/// Throws std::invalid_argument if K is not a near cone w.r.t. 1 or a
/// coefficient vanishes.
SarkariaMaps sarkaria_maps(const SimplicialComplex& k, std::span<const Residue> alphas,
                           const PrimeField& field = PrimeField{});

/// U and D applied to an arbitrary element supported on faces of K.
ExteriorElement sarkaria_u(const SimplicialComplex& k, const ExteriorElement& x);
ExteriorElement sarkaria_d(const SimplicialComplex& k, std::span<const Residue> alphas,
                           const ExteriorElement& x);

} // namespace shiftkit
