#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "shiftkit/complex.hpp"
#include "shiftkit/field.hpp"

namespace shiftkit {

/// How compound-matrix entries det A[S,T] are produced.
enum class MinorMethod {
  /// Each entry by its own k x k elimination (reference path).
  PerEntry,
  /// One row reduction of the strip A[S,.] per row, then small minors.
  StripReduction,
};

struct ShiftOptions {
  PrimeField field{};
  MinorMethod method = MinorMethod::StripReduction;
  /// Reseeds allowed when a generic draw produces a non-shifted result.
  int max_retries = 3;
};

struct ShiftValidation {
  bool is_shifted = false;
  bool f_vector_preserved = false;
};

struct ShiftResult {
  SimplicialComplex shifted;
  MatrixSpec spec_used;
  /// Seed of the matrix actually used; empty for explicit matrices.
  std::optional<std::uint64_t> seed_used;
  ShiftValidation validated;
  int retries = 0;
};

/// Raised when a generic shift still fails validation after every retry.
class ShiftValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Coordinates of f_S in the e_T basis restricted to `columns`:
/// entry j is det A[S, columns[j]].
std::vector<Residue> compound_row(const FieldMatrix& a, Face s, std::span<const Face> columns,
                                  MinorMethod method = MinorMethod::PerEntry);

/// The lex-greedy face family of Δ_A(K) for a fixed nonsingular A, without
/// validation or retries.
SimplicialComplex shift_with_matrix(const SimplicialComplex& k, const FieldMatrix& a,
                                    MinorMethod method = MinorMethod::StripReduction);

/// Exterior algebraic shifting of a nonempty complex.
///
/// For generic specs the output is checked for shiftedness and the matrix is
/// redrawn from a derived seed on failure. Block and explicit specs are
/// returned as computed, with the validation flags describing them.
ShiftResult exterior_shift(const SimplicialComplex& k, const MatrixSpec& spec,
                           const ShiftOptions& options = {});

/// Generic shifting with a seeded matrix; returns the shifted complex only.
SimplicialComplex algebraic_shift(const SimplicialComplex& k,
                                  std::uint64_t seed = kDefaultSeed);

enum class LexBound { Strict, Inclusive };

/// dim of the intersection over R <_L S (Strict) or R <=_L S (Inclusive),
/// |R| = |S|, of Ker(f_R⌊ : ⋀^{|S|+i} K -> ⋀^{i} K).
///
/// The maps are assembled from degree-one interior products only, never
/// from compound rows, so this is an independent check on the engine.
/// With `restricted`, R ranges over subsets of [|K_0|] and each f_r is
/// replaced by its projection f⁰_r onto the coordinates of K_0.
std::size_t kernel_intersection_dim(const SimplicialComplex& k, const FieldMatrix& a, Face s,
                                    LexBound bound, int extra_degree, bool restricted = false);

/// Closed form for dim of the image of the stacked map ⊕_{R <_L S} f_R⌊ on
/// ⋀^{s+1} of the complete complex on [h]; zero when s >= h.
std::size_t image_dim_complete(int h, int n, Face s);

} // namespace shiftkit
