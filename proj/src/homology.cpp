#include "shiftkit/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftkit {
namespace {

std::size_t index_in_level(std::span<const Face> level, Face f) {
  const auto it = std::lower_bound(level.begin(), level.end(), f);
  if (it == level.end() || *it != f) {
    throw std::invalid_argument("face " + f.to_string() + " is not in the carrier complex");
  }
  return static_cast<std::size_t>(it - level.begin());
}

void require_coefficients(const SimplicialComplex& k, std::span<const Residue> g) {
  if (static_cast<int>(g.size()) < k.vertex_set().max_vertex()) {
    throw std::invalid_argument("coefficient vector does not cover the vertex set");
  }
}

} // namespace

std::optional<SignedFace> interior_product(Face t, Face s) {
  if (!t.is_subset_of(s)) return std::nullopt;
  const Face rest = s - t;
  int a = 0;
  t.for_each_vertex([&](Vertex v) { a += count_above(rest, v); });
  return SignedFace{rest, (a & 1) ? -1 : 1};
}

int wedge_parity(Face s, Face t) {
  int parity = 0;
  s.for_each_vertex([&](Vertex v) { parity += count_below(t, v); });
  return parity & 1;
}

ExteriorElement ExteriorElement::basis(PrimeField field, Face s, Residue coeff) {
  ExteriorElement x(field);
  x.add_term(s, coeff);
  return x;
}

void ExteriorElement::add_term(Face s, Residue coeff) {
  coeff %= field_.prime();
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second = field_.add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

Residue ExteriorElement::coefficient(Face s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& other) const {
  ExteriorElement out = *this;
  for (const auto& [face, c] : other.terms_) out.add_term(face, c);
  return out;
}

ExteriorElement ExteriorElement::scaled(Residue c) const {
  ExteriorElement out(field_);
  for (const auto& [face, x] : terms_) out.add_term(face, field_.mul(x, c));
  return out;
}

ExteriorElement ExteriorElement::wedge(const ExteriorElement& other) const {
  ExteriorElement out(field_);
  for (const auto& [s, a] : terms_) {
    for (const auto& [t, b] : other.terms_) {
      if (s.intersects(t)) continue;
      const Residue c = field_.mul(field_.sign(wedge_parity(s, t)), field_.mul(a, b));
      out.add_term(s | t, c);
    }
  }
  return out;
}

ExteriorElement ExteriorElement::interior(const ExteriorElement& other) const {
  ExteriorElement out(field_);
  for (const auto& [t, a] : terms_) {
    for (const auto& [s, b] : other.terms_) {
      const auto r = interior_product(t, s);
      if (!r) continue;
      out.add_term(r->face, field_.mul(field_.sign(r->sign < 0 ? 1 : 0), field_.mul(a, b)));
    }
  }
  return out;
}

std::string ExteriorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [face, c] : terms_) {
    if (!first) os << " + ";
    os << c << "*e" << face.to_string();
    first = false;
  }
  return os.str();
}

ExteriorElement ChainVector::to_exterior(const SimplicialComplex& k,
                                         const PrimeField& field) const {
  const auto level = k.faces_of_size(degree);
  if (coords.size() != level.size()) {
    throw std::invalid_argument("chain vector length does not match the carrier level");
  }
  ExteriorElement x(field);
  for (std::size_t i = 0; i < coords.size(); ++i) x.add_term(level[i], coords[i]);
  return x;
}

ChainVector ChainVector::from_exterior(const SimplicialComplex& k, int degree,
                                       const ExteriorElement& x) {
  const auto level = k.faces_of_size(degree);
  ChainVector out{degree, std::vector<Residue>(level.size(), 0)};
  for (const auto& [face, c] : x.terms()) {
    if (face.size() != degree) {
      throw std::invalid_argument("element has a term of the wrong degree");
    }
    out.coords[index_in_level(level, face)] = c;
  }
  return out;
}

FieldMatrix boundary_matrix(const SimplicialComplex& k, std::span<const Residue> g, int degree,
                            const PrimeField& field) {
  if (degree < 1) throw std::invalid_argument("boundary_matrix: degree must be at least 1");
  require_coefficients(k, g);
  const auto rows = k.faces_of_size(degree - 1);
  const auto cols = k.faces_of_size(degree);
  FieldMatrix m(field, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Face s = cols[c];
    s.for_each_vertex([&](Vertex v) {
      const Residue coeff = g[static_cast<std::size_t>(v - 1)] % field.prime();
      if (coeff == 0) return;
      // e_v ⌊ e_S = (-1)^{#{u in S : u > v}} e_{S \ v}
      const Residue signed_coeff = field.mul(field.sign(count_above(s, v)), coeff);
      m(index_in_level(rows, s.without(v)), c) = signed_coeff;
    });
  }
  return m;
}

std::size_t BettiVector::beta(int d) const {
  const int k = d + 1;
  if (k < 0 || k >= static_cast<int>(values.size())) return 0;
  return values[static_cast<std::size_t>(k)];
}

std::string BettiVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ')';
  return os.str();
}

BettiVector betti_direct(const SimplicialComplex& k, const PrimeField& field) {
  if (k.is_empty()) throw std::invalid_argument("betti_direct: empty complex");
  const int top = k.dim() + 1;  // largest cardinality
  const std::vector<Residue> ones(static_cast<std::size_t>(std::max(k.n(), 1)), 1);
  // ranks[c] = rank of the boundary from cardinality c to c-1.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int c = 1; c <= top; ++c) {
    ranks[static_cast<std::size_t>(c)] = boundary_matrix(k, ones, c, field).rank();
  }
  BettiVector out;
  for (int c = 0; c <= top; ++c) {
    const std::size_t f = k.faces_of_size(c).size();
    out.values.push_back(f - ranks[static_cast<std::size_t>(c)] -
                         ranks[static_cast<std::size_t>(c + 1)]);
  }
  return out;
}

BettiVector betti_from_shifted(const SimplicialComplex& delta) {
  if (!is_shifted(delta)) throw std::invalid_argument("betti_from_shifted: input not shifted");
  BettiVector out;
  for (int c = 0; c <= delta.dim() + 1; ++c) {
    std::size_t count = 0;
    for (Face s : delta.faces_of_size(c)) {
      if (!s.contains(1) && !delta.contains(s.with(1))) ++count;
    }
    out.values.push_back(count);
  }
  return out;
}

bool is_near_cone(const SimplicialComplex& k, Vertex v) {
  for (const Face s : k.faces()) {
    bool ok = true;
    s.for_each_vertex([&](Vertex j) {
      if (ok && j != v) ok = k.contains(s.without(j).with(v));
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

void require_sarkaria_inputs(const SimplicialComplex& k, std::span<const Residue> alphas,
                             const PrimeField& field) {
  if (!is_near_cone(k, 1)) {
    throw std::invalid_argument("Sarkaria maps need a near cone with respect to vertex 1");
  }
  require_coefficients(k, alphas);
  k.vertex_set().for_each_vertex([&](Vertex v) {
    if (alphas[static_cast<std::size_t>(v - 1)] % field.prime() == 0) {
      throw std::invalid_argument("Sarkaria coefficient for vertex " + std::to_string(v) +
                                  " is zero");
    }
  });
}

ExteriorElement u_of_basis(const PrimeField& field, Face s) {
  auto x = ExteriorElement::basis(field, s);
  if (s.contains(1)) return x;
  s.for_each_vertex([&](Vertex i) {
    // - (-1)^{sgn(i,S)} e_{S ∪ 1 \ i}
    x.add_term(s.without(i).with(1), field.neg(field.sign(count_below(s, i))));
  });
  return x;
}

Residue d_scale(const PrimeField& field, std::span<const Residue> alphas, Face s) {
  Residue prod = 1;
  s.for_each_vertex([&](Vertex v) { prod = field.mul(prod, alphas[static_cast<std::size_t>(v - 1)]); });
  return field.inv(prod);
}

} // namespace

SarkariaMaps sarkaria_maps(const SimplicialComplex& k, std::span<const Residue> alphas,
                           const PrimeField& field) {
  require_sarkaria_inputs(k, alphas, field);
  SarkariaMaps maps;
  for (int c = 0; c <= k.dim() + 1; ++c) {
    const auto level = k.faces_of_size(c);
    FieldMatrix u(field, level.size(), level.size());
    FieldMatrix d(field, level.size(), level.size());
    for (std::size_t col = 0; col < level.size(); ++col) {
      const auto image = u_of_basis(field, level[col]);
      for (const auto& [face, coeff] : image.terms()) u(index_in_level(level, face), col) = coeff;
      d(col, col) = d_scale(field, alphas, level[col]);
    }
    maps.u.push_back(std::move(u));
    maps.d.push_back(std::move(d));
  }
  return maps;
}

ExteriorElement sarkaria_u(const SimplicialComplex& k, const ExteriorElement& x) {
  if (!is_near_cone(k, 1)) {
    throw std::invalid_argument("Sarkaria maps need a near cone with respect to vertex 1");
  }
  ExteriorElement out(x.field());
  for (const auto& [face, c] : x.terms()) {
    if (!k.contains(face)) throw std::invalid_argument("element not supported on the complex");
    out = out + u_of_basis(x.field(), face).scaled(c);
  }
  return out;
}

ExteriorElement sarkaria_d(const SimplicialComplex& k, std::span<const Residue> alphas,
                           const ExteriorElement& x) {
  require_sarkaria_inputs(k, alphas, x.field());
  ExteriorElement out(x.field());
  for (const auto& [face, c] : x.terms()) {
    if (!k.contains(face)) throw std::invalid_argument("element not supported on the complex");
    out.add_term(face, x.field().mul(c, d_scale(x.field(), alphas, face)));
  }
  return out;
}

} // namespace shiftkit
