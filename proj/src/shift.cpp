#include "shiftkit/shift.hpp"

#include <stdexcept>
#include <string>

#include "shiftkit/homology.hpp"

namespace shiftkit {
namespace {

void require_square(const FieldMatrix& a, int n) {
  if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("transition matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
  }
}

// Row-reduced copy of the strip A[S, .] and the factor turning its minors
// back into minors of A.
class StripMinors {
public:
  StripMinors(const FieldMatrix& a, Face s)
      : field_(a.field()), k_(static_cast<std::size_t>(s.size())), n_(a.cols()),
        r_(k_ * n_, 0) {
    std::size_t row = 0;
    s.for_each_vertex([&](Vertex v) {
      for (std::size_t c = 0; c < n_; ++c) r_[row * n_ + c] = a(static_cast<std::size_t>(v - 1), c);
      ++row;
    });
    reduce();
  }

  Residue minor(Face cols) const {
    if (cols.size() != static_cast<int>(k_)) {
      throw std::invalid_argument("column set size differs from row set size");
    }
    if (degenerate_) return 0;
    // Pivot columns inside T contribute an identity block after permuting
    // it to the top left.
    std::vector<std::size_t> col_pos;
    std::vector<bool> row_used(k_, false);
    int parity = 0;
    int pos = 0;
    cols.for_each_vertex([&](Vertex v) {
      ++pos;
      const auto c = static_cast<std::size_t>(v - 1);
      const int r = pivot_row_of_col_[c];
      if (r >= 0) {
        row_used[static_cast<std::size_t>(r)] = true;
        parity += r + 1 + pos;
      } else {
        col_pos.push_back(c);
      }
    });
    const std::size_t m = col_pos.size();
    if (m == 0) return field_.mul(field_.sign(parity), inv_det_e_);
    FieldMatrix sub(field_, m, m);
    std::size_t i = 0;
    for (std::size_t r = 0; r < k_; ++r) {
      if (row_used[r]) continue;
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = r_[r * n_ + col_pos[j]];
      ++i;
    }
    return field_.mul(field_.mul(field_.sign(parity), sub.determinant()), inv_det_e_);
  }

private:
  void reduce() {
    pivot_row_of_col_.assign(n_, -1);
    Residue det_e = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n_ && row < k_; ++c) {
      std::size_t p = row;
      while (p < k_ && r_[p * n_ + c] == 0) ++p;
      if (p == k_) continue;
      if (p != row) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(r_[p * n_ + j], r_[row * n_ + j]);
        det_e = field_.neg(det_e);
      }
      const Residue inv = field_.inv(r_[row * n_ + c]);
      for (std::size_t j = 0; j < n_; ++j) r_[row * n_ + j] = field_.mul(r_[row * n_ + j], inv);
      det_e = field_.mul(det_e, inv);
      for (std::size_t other = 0; other < k_; ++other) {
        if (other == row) continue;
        const Residue f = r_[other * n_ + c];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          r_[other * n_ + j] = field_.sub(r_[other * n_ + j], field_.mul(f, r_[row * n_ + j]));
        }
      }
      pivot_row_of_col_[c] = static_cast<int>(row);
      ++row;
    }
    degenerate_ = row < k_;
    if (!degenerate_) inv_det_e_ = field_.inv(det_e);
  }

  PrimeField field_;
  std::size_t k_;
  std::size_t n_;
  std::vector<Residue> r_;
  std::vector<int> pivot_row_of_col_;
  Residue inv_det_e_ = 1;
  bool degenerate_ = false;
};

ShiftValidation validate(const SimplicialComplex& k, const SimplicialComplex& delta) {
  return {is_shifted(delta), k.f_vector() == delta.f_vector()};
}

} // namespace

std::vector<Residue> compound_row(const FieldMatrix& a, Face s, std::span<const Face> columns,
                                  MinorMethod method) {
  std::vector<Residue> out;
  out.reserve(columns.size());
  if (method == MinorMethod::PerEntry) {
    for (Face t : columns) out.push_back(minor(a, s, t));
    return out;
  }
  if (s.max_vertex() > static_cast<int>(a.rows())) {
    throw std::out_of_range("row set exceeds the matrix");
  }
  const StripMinors strip(a, s);
  for (Face t : columns) {
    if (t.max_vertex() > static_cast<int>(a.cols())) {
      throw std::out_of_range("column set exceeds the matrix");
    }
    out.push_back(strip.minor(t));
  }
  return out;
}

SimplicialComplex shift_with_matrix(const SimplicialComplex& k, const FieldMatrix& a,
                                    MinorMethod method) {
  const int n = k.n();
  require_square(a, n);
  std::vector<Face> faces;
  if (k.is_empty()) return SimplicialComplex(n);
  faces.push_back(Face{});
  for (int c = 1; c <= k.dim() + 1; ++c) {
    const auto columns = k.faces_of_size(c);
    RowEchelonAccumulator acc(a.field(), columns.size());
    for_each_subset_lex(n, c, [&](Face s) {
      if (acc.insert_row(compound_row(a, s, columns, method))) faces.push_back(s);
      return acc.rank() < columns.size();
    });
    if (acc.rank() < columns.size()) {
      throw std::invalid_argument("transition matrix is singular");
    }
  }
  return SimplicialComplex::from_faces(n, faces);
}

ShiftResult exterior_shift(const SimplicialComplex& k, const MatrixSpec& spec,
                           const ShiftOptions& options) {
  if (k.is_empty()) throw std::invalid_argument("cannot shift the empty complex");
  if (options.max_retries < 0) throw std::invalid_argument("max_retries must be nonnegative");
  const int n = k.n();

  if (const auto* generic = std::get_if<GenericSpec>(&spec)) {
    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
      const std::uint64_t seed =
          attempt == 0 ? generic->seed
                       : mix_seed(generic->seed + static_cast<std::uint64_t>(attempt));
      const GenericSpec used{seed};
      const auto a = realize(used, n, options.field);
      auto delta = shift_with_matrix(k, a, options.method);
      const auto v = validate(k, delta);
      if (v.is_shifted && v.f_vector_preserved) {
        return ShiftResult{std::move(delta), used, seed, v, attempt};
      }
    }
    throw ShiftValidationError("generic shift of " + k.to_string() + " failed validation after " +
                               std::to_string(options.max_retries) + " retries");
  }

  const auto a = realize(spec, n, options.field);
  auto delta = shift_with_matrix(k, a, options.method);
  const auto v = validate(k, delta);
  std::optional<std::uint64_t> seed;
  if (const auto* block = std::get_if<BlockGenericSpec>(&spec)) seed = block->seed;
  return ShiftResult{std::move(delta), spec, seed, v, 0};
}

SimplicialComplex algebraic_shift(const SimplicialComplex& k, std::uint64_t seed) {
  return exterior_shift(k, GenericSpec{seed}).shifted;
}

std::size_t kernel_intersection_dim(const SimplicialComplex& k, const FieldMatrix& a, Face s,
                                    LexBound bound, int extra_degree, bool restricted) {
  const int n = k.n();
  require_square(a, n);
  if (extra_degree < 0) throw std::invalid_argument("extra degree must be nonnegative");
  const int sz = s.size();
  const int m = restricted ? k.num_vertices() : n;
  const std::size_t domain = k.faces_of_size(sz + extra_degree).size();
  if (domain == 0) return 0;

  const PrimeField& field = a.field();
  const Face support = restricted ? k.vertex_set() : Face::range(1, n);
  // bmat[r][j]: f_r ⌊ from cardinality extra_degree + j + 1 down by one.
  std::vector<std::vector<FieldMatrix>> bmat(static_cast<std::size_t>(m));
  for (int r = 1; r <= m; ++r) {
    std::vector<Residue> g(static_cast<std::size_t>(n), 0);
    for (int c = 1; c <= n; ++c) {
      if (support.contains(c)) g[static_cast<std::size_t>(c - 1)] = a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
    }
    for (int j = 0; j < sz; ++j) {
      bmat[static_cast<std::size_t>(r - 1)].push_back(boundary_matrix(k, g, extra_degree + j + 1, field));
    }
  }

  RowEchelonAccumulator acc(field, domain);
  auto take = [&](Face r) {
    if (sz == 0) {
      const auto id = FieldMatrix::identity(field, domain);
      for (std::size_t i = 0; i < domain; ++i) acc.insert_row(id.row(i));
      return acc.rank() < domain;
    }
    // f_R ⌊ = f_{r_1} ⌊ ∘ ... ∘ f_{r_s} ⌊
    const auto vs = r.vertices();
    FieldMatrix prod = bmat[static_cast<std::size_t>(vs[0] - 1)][0];
    for (std::size_t j = 1; j < vs.size(); ++j) {
      prod = prod * bmat[static_cast<std::size_t>(vs[j] - 1)][j];
    }
    for (std::size_t i = 0; i < prod.rows(); ++i) acc.insert_row(prod.row(i));
    return acc.rank() < domain;
  };
  for_each_subset_lex(m, sz, [&](Face r) {
    if (r == s) {
      if (bound == LexBound::Inclusive) take(r);
      return false;
    }
    if (!lex_less(r, s)) return false;
    return take(r);
  });
  return domain - acc.rank();
}

std::size_t image_dim_complete(int h, int n, Face s) {
  const int sz = s.size();
  if (sz < 1) throw std::invalid_argument("image_dim_complete: S must be nonempty");
  if (h < 0 || h > n) throw std::invalid_argument("image_dim_complete: need 0 <= h <= n");
  if (s.max_vertex() > n) throw std::invalid_argument("image_dim_complete: S not in [n]");
  if (sz >= h) return 0;
  std::size_t below = 0;
  for_each_subset_lex(h, sz, [&](Face r) {
    if (!lex_less(r, s)) return false;
    ++below;
    return true;
  });
  std::size_t overlap = 0;
  for_each_subset_lex(h, sz + 1, [&](Face t) {
    if (!lex_less(init(t, sz), s)) return true;
    std::size_t count = 0;
    t.for_each_vertex([&](Vertex v) {
      if (lex_less(t.without(v), s)) ++count;
    });
    if (count > 1) overlap += count - 1;
    return true;
  });
  return below * static_cast<std::size_t>(h - sz) - overlap;
}

} // namespace shiftkit
