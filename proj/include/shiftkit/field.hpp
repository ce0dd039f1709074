#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "shiftkit/face.hpp"

namespace shiftkit {

/// A residue in [0, p) for the prime p of the owning PrimeField.
using Residue = std::uint64_t;

__extension__ using UInt128 = unsigned __int128;

/// 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = (1ULL << 61) - 1;

/// Arithmetic modulo a prime p < 2^62.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const { return p_; }

  Residue reduce(std::int64_t value) const;
  Residue add(Residue a, Residue b) const {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<UInt128>(a) * b) % p_);
  }
  Residue pow(Residue base, std::uint64_t exp) const;
  /// Throws std::domain_error on zero.
  Residue inv(Residue a) const;
  /// (-1)^parity.
  Residue sign(int parity) const { return (parity & 1) ? p_ - 1 : 1; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Dense rectangular matrix over a prime field.
class FieldMatrix {
public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::size_t rank() const;
  /// Throws std::invalid_argument for non-square matrices.
  Residue determinant() const;
  bool is_zero() const;

  /// Rows of `below` appended under this matrix (equal column counts).
  FieldMatrix stacked(const FieldMatrix& below) const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Determinant of the square submatrix on 1-based rows `rows` and columns
/// `cols`. Throws std::invalid_argument on a size mismatch and
/// std::out_of_range for indices beyond the matrix.
Residue minor(const FieldMatrix& m, Face rows, Face cols);

/// Incrementally maintained reduced row echelon basis.
class RowEchelonAccumulator {
public:
  RowEchelonAccumulator(PrimeField field, std::size_t width);

  /// Adds `v` to the basis when it is independent of it. Returns whether it
  /// was added; the accumulator is unchanged otherwise.
  bool insert_row(std::span<const Residue> v);
  /// Whether `v` lies in the span of the basis.
  bool in_span(std::span<const Residue> v) const;

  std::size_t rank() const { return basis_.size(); }
  std::size_t width() const { return width_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

private:
  std::vector<Residue> reduced(std::span<const Residue> v) const;

  PrimeField field_;
  std::size_t width_;
  std::vector<std::vector<Residue>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Independent uniform residues from a seeded generator.
struct GenericSpec {
  std::uint64_t seed = 0;
  friend bool operator==(const GenericSpec&, const GenericSpec&) = default;
};

/// Block-diagonal matrix with random blocks of sizes `upper` and `lower`.
struct BlockGenericSpec {
  int upper = 0;
  int lower = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const BlockGenericSpec&, const BlockGenericSpec&) = default;
};

/// A caller-supplied square matrix; entries are reduced modulo p.
struct ExplicitSpec {
  std::vector<std::vector<std::int64_t>> entries;
  friend bool operator==(const ExplicitSpec&, const ExplicitSpec&) = default;
};

using MatrixSpec = std::variant<GenericSpec, BlockGenericSpec, ExplicitSpec>;

std::string describe(const MatrixSpec& spec);

/// Thrown when an explicit matrix is singular or has the wrong shape.
class SingularMatrixError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The n x n transition matrix described by `spec`. Random variants are
/// redrawn from the same stream until nonsingular.
FieldMatrix realize(const MatrixSpec& spec, int n, const PrimeField& field);

/// Uniform residues in [0, p) from a splitmix64 stream; reproducible across
/// platforms for a given seed.
class ResidueStream {
public:
  ResidueStream(std::uint64_t seed, const PrimeField& field);
  Residue next();
  /// Uniform nonzero residue.
  Residue next_nonzero();

private:
  std::uint64_t next_word();

  std::uint64_t state_;
  std::uint64_t p_;
  std::uint64_t limit_;
};

/// splitmix64 finalizer; used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);

} // namespace shiftkit
