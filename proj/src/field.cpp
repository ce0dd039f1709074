#include "shiftkit/field.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace shiftkit {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Row-reduces `data` (rows x cols, row-major) in place and returns the rank.
// When `det` is non-null the matrix is square and the determinant is stored.
std::size_t eliminate(const PrimeField& f, std::vector<Residue>& data, std::size_t rows,
                      std::size_t cols, Residue* det) {
  std::size_t rank = 0;
  Residue d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && data[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) {
      d = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) {
        std::swap(data[pivot * cols + j], data[rank * cols + j]);
      }
      d = f.neg(d);
    }
    const Residue pv = data[rank * cols + c];
    d = f.mul(d, pv);
    const Residue pinv = f.inv(pv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Residue x = data[r * cols + c];
      if (x == 0) continue;
      const Residue factor = f.mul(x, pinv);
      for (std::size_t j = c; j < cols; ++j) {
        data[r * cols + j] = f.sub(data[r * cols + j], f.mul(factor, data[rank * cols + j]));
      }
    }
    ++rank;
  }
  if (det != nullptr) *det = rank == rows ? d : 0;
  return rank;
}

} // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 62) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^62");
  }
}

Residue PrimeField::reduce(std::int64_t value) const {
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = value % sp;
  if (r < 0) r += sp;
  return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const { return powmod(base, exp, p_); }

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::size_t FieldMatrix::rank() const {
  auto copy = data_;
  return eliminate(field_, copy, rows_, cols_, nullptr);
}

Residue FieldMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  auto copy = data_;
  Residue det = 0;
  eliminate(field_, copy, rows_, cols_, &det);
  return det;
}

bool FieldMatrix::is_zero() const {
  for (Residue x : data_) {
    if (x != 0) return false;
  }
  return true;
}

FieldMatrix FieldMatrix::stacked(const FieldMatrix& below) const {
  if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0) {
    throw std::invalid_argument("stacked: column counts differ");
  }
  FieldMatrix out(field_, rows_ + below.rows_, rows_ == 0 ? below.cols_ : cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner sizes differ");
  const PrimeField& f = a.field_;
  FieldMatrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Residue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
      }
    }
  }
  return out;
}

Residue minor(const FieldMatrix& m, Face rows, Face cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: size mismatch");
  if (static_cast<std::size_t>(rows.max_vertex()) > m.rows() ||
      static_cast<std::size_t>(cols.max_vertex()) > m.cols()) {
    throw std::out_of_range("minor: index outside the matrix");
  }
  const auto rv = rows.vertices();
  const auto cv = cols.vertices();
  const std::size_t k = rv.size();
  if (k == 0) return 1;
  std::vector<Residue> data(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      data[i * k + j] = m(static_cast<std::size_t>(rv[i] - 1), static_cast<std::size_t>(cv[j] - 1));
    }
  }
  Residue det = 0;
  eliminate(m.field(), data, k, k, &det);
  return det;
}

RowEchelonAccumulator::RowEchelonAccumulator(PrimeField field, std::size_t width)
    : field_(field), width_(width) {}

std::vector<Residue> RowEchelonAccumulator::reduced(std::span<const Residue> v) const {
  if (v.size() != width_) throw std::invalid_argument("row width does not match accumulator");
  std::vector<Residue> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Residue x = w[pivots_[i]];
    if (x == 0) continue;
    const auto& b = basis_[i];
    for (std::size_t j = 0; j < width_; ++j) {
      if (b[j] != 0) w[j] = field_.sub(w[j], field_.mul(x, b[j]));
    }
  }
  return w;
}

bool RowEchelonAccumulator::in_span(std::span<const Residue> v) const {
  const auto w = reduced(v);
  for (Residue x : w) {
    if (x != 0) return false;
  }
  return true;
}

bool RowEchelonAccumulator::insert_row(std::span<const Residue> v) {
  auto w = reduced(v);
  std::size_t pivot = 0;
  while (pivot < width_ && w[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  const Residue scale = field_.inv(w[pivot]);
  for (Residue& x : w) x = field_.mul(x, scale);
  // Keep the basis fully reduced: clear the new pivot column elsewhere.
  for (auto& b : basis_) {
    const Residue x = b[pivot];
    if (x == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (w[j] != 0) b[j] = field_.sub(b[j], field_.mul(x, w[j]));
    }
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

std::string describe(const MatrixSpec& spec) {
  std::ostringstream os;
  if (std::holds_alternative<GenericSpec>(spec)) {
    os << "generic";
  } else if (const auto* b = std::get_if<BlockGenericSpec>(&spec)) {
    os << "block:" << b->upper << ',' << b->lower;
  } else {
    os << "explicit";
  }
  return os.str();
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

ResidueStream::ResidueStream(std::uint64_t seed, const PrimeField& field)
    : state_(seed), p_(field.prime()), limit_(~0ULL - (~0ULL % field.prime())) {}

std::uint64_t ResidueStream::next_word() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

Residue ResidueStream::next() {
  std::uint64_t w = next_word();
  while (w >= limit_) w = next_word();
  return w % p_;
}

Residue ResidueStream::next_nonzero() {
  Residue r = next();
  while (r == 0) r = next();
  return r;
}

FieldMatrix realize(const MatrixSpec& spec, int n, const PrimeField& field) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("realize: n outside 0..64");
  const auto size = static_cast<std::size_t>(n);

  if (const auto* ex = std::get_if<ExplicitSpec>(&spec)) {
    if (ex->entries.size() != size) {
      throw SingularMatrixError("explicit matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    }
    FieldMatrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) {
      if (ex->entries[i].size() != size) {
        throw SingularMatrixError("explicit matrix row " + std::to_string(i + 1) +
                                  " has the wrong length");
      }
      for (std::size_t j = 0; j < size; ++j) m(i, j) = field.reduce(ex->entries[i][j]);
    }
    if (m.determinant() == 0) throw SingularMatrixError("explicit matrix is singular");
    return m;
  }

  if (const auto* g = std::get_if<GenericSpec>(&spec)) {
    ResidueStream stream(g->seed, field);
    while (true) {
      FieldMatrix m(field, size, size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) m(i, j) = stream.next();
      }
      if (m.determinant() != 0) return m;
    }
  }

  const auto& b = std::get<BlockGenericSpec>(spec);
  if (b.upper < 0 || b.lower < 0 || b.upper + b.lower != n) {
    throw std::invalid_argument("block sizes must be nonnegative and sum to n");
  }
  ResidueStream stream(b.seed, field);
  const auto k = static_cast<std::size_t>(b.upper);
  while (true) {
    FieldMatrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if ((i < k) == (j < k)) m(i, j) = stream.next();
      }
    }
    if (m.determinant() != 0) return m;
  }
}

} // namespace shiftkit
