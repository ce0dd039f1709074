#include "shiftkit/cli/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "shiftkit/generators.hpp"
#include "shiftkit/homology.hpp"
#include "shiftkit/operators.hpp"

namespace shiftkit::cli {
namespace {

constexpr std::uint64_t kSecondSeedSalt = 0x9e3779b97f4a7c15ULL;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class SuiteRunner {
public:
  SuiteRunner(std::string name, const SuiteOptions& options) {
    if (options.trials < 0) throw std::invalid_argument("trials must be nonnegative");
    report_.name = std::move(name);
    report_.options = options;
  }

  Rng rng(std::size_t index) const {
    return Rng(mix_seed(report_.options.seed + static_cast<std::uint64_t>(index)));
  }
  std::uint64_t seed() const { return report_.options.seed; }
  int trials() const { return report_.options.trials; }
  int max_n() const { return report_.options.max_n; }

  void run(const std::string& description, const std::function<Outcome()>& body) {
    Instance inst;
    inst.index = report_.instances.size();
    inst.description = description;
    try {
      const auto out = body();
      inst.ok = out.ok;
      inst.detail = out.detail;
    } catch (const std::exception& e) {
      inst.ok = false;
      inst.detail = std::string("exception: ") + e.what();
    }
    report_.instances.push_back(std::move(inst));
  }

  SuiteReport finish() { return std::move(report_); }

private:
  SuiteReport report_;
};

int pick(Rng& rng, int lo, int hi) {
  if (hi < lo) hi = lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

RandomComplexOptions sized_options(int n) {
  return {std::max(2, n), std::min(4, std::max(1, n))};
}

void require_max_n(const SuiteOptions& options, int minimum, const char* suite) {
  if (options.max_n < minimum) {
    throw std::invalid_argument(std::string(suite) + " needs --max-n of at least " +
                                std::to_string(minimum));
  }
}

std::string faces_text(const std::vector<Face>& faces) {
  std::string out = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) out += ',';
    out += faces[i].to_string();
  }
  return out + "}";
}

Outcome expect_equal(const SimplicialComplex& got, const SimplicialComplex& want,
                     const std::string& what) {
  if (got == want) return {};
  return {false, what + ": got " + got.to_string() + ", expected " + want.to_string()};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  for (const auto& p : parts) {
    if (!p.ok) return p;
  }
  return {};
}

Face random_face_in(Rng& rng, const SimplicialComplex& k, int size) {
  const auto level = k.faces_of_size(size);
  if (level.empty()) throw std::logic_error("no face of the requested size");
  return level[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(level.size()) - 1))];
}

Face random_subset(Rng& rng, int n, int size) {
  auto perm = random_permutation(rng, n);
  perm.resize(static_cast<std::size_t>(size));
  return Face(std::span<const Vertex>(perm));
}

} // namespace

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const Instance& i) { return !i.ok; }));
}

SuiteReport suite_union_eq1(const SuiteOptions& options) {
  require_max_n(options, 2, "union-eq1");
  SuiteRunner runner("union-eq1", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 2, runner.max_n());
    SimplicialComplex k, l;
    do {
      k = random_complex(rng, n, sized_options(n));
      l = random_complex(rng, n, sized_options(n));
    } while (intersection_of(k, l).dim() < 0);
    std::vector<Face> as;
    for (int size = 0; size <= std::min(3, n); ++size) {
      for (Face a : subsets_lex(n, size)) as.push_back(a);
    }
    runner.run("K=" + k.to_string() + " L=" + l.to_string(), [&]() -> Outcome {
      const auto pairs = union_interval_check(k, l, as, runner.seed());
      for (std::size_t i = 0; i < as.size(); ++i) {
        if (!pairs[i].holds()) {
          return {false, "A=" + as[i].to_string() + ": lhs " + std::to_string(pairs[i].lhs) +
                             " rhs " + std::to_string(pairs[i].rhs)};
        }
      }
      return {true, std::to_string(as.size()) + " sets A checked"};
    });
  }
  return runner.finish();
}

SuiteReport suite_clique_sum(const SuiteOptions& options) {
  require_max_n(options, 2, "clique-sum");
  SuiteRunner runner("clique-sum", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int d = pick(rng, -1, std::min(2, runner.max_n() - 2));
    const int nk = d < 0 ? pick(rng, 1, runner.max_n() - 1) : pick(rng, d + 1, runner.max_n());
    const int nl = pick(rng, std::max(1, d + 1), runner.max_n() - nk + d + 1);
    auto with_simplex = [&](int n) {
      auto facets = random_complex(rng, n, sized_options(n)).facets();
      if (d >= 0) facets.push_back(random_subset(rng, n, d + 1));
      return SimplicialComplex::from_facets(n, facets);
    };
    const auto k = with_simplex(nk);
    const auto l = with_simplex(nl);
    const Face sk = random_face_in(rng, k, d + 1);
    const Face sl = random_face_in(rng, l, d + 1);
    const Face sk2 = random_face_in(rng, k, d + 1);
    const Face sl2 = random_face_in(rng, l, d + 1);
    runner.run("d=" + std::to_string(d) + " K=" + k.to_string() + " L=" + l.to_string(),
               [&]() -> Outcome {
                 const auto glued = clique_sum(k, l, sk, sl);
                 const auto engine = algebraic_shift(glued, runner.seed());
                 const auto formula = clique_sum_shift(algebraic_shift(k, runner.seed()),
                                                       algebraic_shift(l, runner.seed()), d,
                                                       glued.n());
                 const auto other = algebraic_shift(clique_sum(k, l, sk2, sl2), runner.seed());
                 return all_of({expect_equal(formula, engine, "gap formula"),
                                expect_equal(other, engine, "second gluing")});
               });
  }
  return runner.finish();
}

SuiteReport suite_disjoint_union(const SuiteOptions& options) {
  require_max_n(options, 2, "disjoint-union");
  SuiteRunner runner("disjoint-union", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int nk = pick(rng, 1, runner.max_n() - 1);
    const int nl = pick(rng, 1, runner.max_n() - nk);
    const auto k = random_complex(rng, nk, sized_options(nk));
    const auto l = random_complex(rng, nl, sized_options(nl));
    runner.run("K=" + k.to_string() + " L=" + l.to_string(), [&]() -> Outcome {
      const auto u = disjoint_union(k, l);
      const auto engine = algebraic_shift(u, runner.seed());
      const auto dk = algebraic_shift(k, runner.seed());
      const auto dl = algebraic_shift(l, runner.seed());
      return all_of({expect_equal(disjoint_union_shift(dk, dl, u.n()), engine, "gap test"),
                     expect_equal(algebraic_shift(disjoint_union(dk, dl), runner.seed()), engine,
                                  "shift of shifted parts")});
    });
  }
  return runner.finish();
}

SuiteReport suite_sqcup(const SuiteOptions& options) {
  require_max_n(options, 2, "sqcup");
  SuiteRunner runner("sqcup", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int nk = pick(rng, 1, runner.max_n() - 1);
    const int nl = pick(rng, 1, runner.max_n() - nk);
    const auto k = random_shifted(rng, nk, sized_options(nk));
    const auto l = random_shifted(rng, nl, sized_options(nl));
    runner.run("K=" + k.to_string() + " L=" + l.to_string(), [&]() -> Outcome {
      const auto u = disjoint_union(k, l);
      const auto engine = algebraic_shift(u, runner.seed());
      return all_of({expect_equal(shifted_union_recursive(k, l), engine, "recursion"),
                     expect_equal(disjoint_union_shift(k, l, u.n()), engine, "gap test")});
    });
  }
  return runner.finish();
}

SuiteReport suite_cone(const SuiteOptions& options) {
  require_max_n(options, 2, "cone");
  SuiteRunner runner("cone", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 1, runner.max_n() - 1);
    const auto k = random_complex(rng, n, sized_options(n));
    const Vertex apex = pick(rng, 1, n + 1);
    const int m = pick(rng, 1, std::max(1, std::min(2, runner.max_n() - n)));
    runner.run("K=" + k.to_string() + " apex=" + std::to_string(apex) + " m=" + std::to_string(m),
               [&]() -> Outcome {
                 const auto dk = algebraic_shift(k, runner.seed());
                 const auto simplex = SimplicialComplex::complete(m);
                 return all_of(
                     {expect_equal(algebraic_shift(cone(k, apex), runner.seed()), cone(dk, 1),
                                   "shift of cone"),
                      expect_equal(algebraic_shift(join(simplex, k), runner.seed()),
                                   join(simplex, dk), "shift of simplex join")});
               });
  }
  return runner.finish();
}

SuiteReport suite_near_cone(const SuiteOptions& options) {
  require_max_n(options, 2, "near-cone");
  SuiteRunner runner("near-cone", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 2, runner.max_n());
    if (t % 2 == 0) {
      const auto base = random_near_cone(rng, n, sized_options(n));
      const auto perm = random_permutation(rng, n);
      const auto k = base.relabeled(perm, n);
      const Vertex v = perm[0];
      runner.run("near cone w.r.t. " + std::to_string(v) + ": " + k.to_string(), [&]() -> Outcome {
        if (!near_cone_decomposition_check(k, v, runner.seed())) {
          return {false, "faces through 1 differ from 1 * shifted link"};
        }
        return {};
      });
    } else {
      const auto k = random_shifted(rng, n, sized_options(n));
      runner.run("shifted " + k.to_string(), [&]() -> Outcome {
        const auto analysis = near_cone_analyze(k);
        if (analysis.refused_at ||
            analysis.certificate.length() != static_cast<std::size_t>(k.num_vertices())) {
          return {false, "shifted complex without a full certificate"};
        }
        if (!near_cone_certificate_check(k, analysis.certificate, runner.seed())) {
          return {false, "iterated decomposition failed"};
        }
        return {true, "certificate length " + std::to_string(analysis.certificate.length())};
      });
    }
  }
  return runner.finish();
}

SuiteReport suite_idempotence(const SuiteOptions& options) {
  require_max_n(options, 1, "idempotence");
  SuiteRunner runner("idempotence", options);
  const std::uint64_t second = mix_seed(options.seed ^ kSecondSeedSalt);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 1, runner.max_n());
    const auto k = random_complex(rng, n, sized_options(n));
    std::vector<std::vector<Vertex>> perms;
    for (int i = 0; i < 5; ++i) perms.push_back(random_permutation(rng, n));
    runner.run("K=" + k.to_string(), [&]() -> Outcome {
      const auto delta = algebraic_shift(k, runner.seed());
      if (auto o = expect_equal(algebraic_shift(delta, runner.seed()), delta, "second shift"); !o.ok) {
        return o;
      }
      for (const auto& perm : perms) {
        if (auto o = expect_equal(algebraic_shift(k.relabeled(perm, n), runner.seed()), delta,
                                  "relabeled input");
            !o.ok) {
          return o;
        }
      }
      return expect_equal(algebraic_shift(k, second), delta, "independent seed");
    });
  }
  return runner.finish();
}

SuiteReport suite_betti(const SuiteOptions& options) {
  require_max_n(options, 1, "betti");
  SuiteRunner runner("betti", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 1, runner.max_n());
    const auto k = random_complex(rng, n, sized_options(n));
    runner.run("K=" + k.to_string(), [&]() -> Outcome {
      const auto delta = algebraic_shift(k, runner.seed());
      if (delta.f_vector() != k.f_vector()) {
        return {false, "f-vector " + delta.f_vector().to_string() + " vs " +
                           k.f_vector().to_string()};
      }
      const auto direct = betti_direct(k);
      const auto read = betti_from_shifted(delta);
      if (direct != read) {
        return {false, "betti " + read.to_string() + " vs " + direct.to_string()};
      }
      return {true, "betti " + direct.to_string()};
    });
  }
  return runner.finish();
}

SuiteReport suite_kernel_dims(const SuiteOptions& options) {
  require_max_n(options, 2, "kernel-dims");
  SuiteRunner runner("kernel-dims", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 2, runner.max_n());
    const auto k = random_complex(rng, n, sized_options(n));
    const auto a = realize(GenericSpec{mix_seed(runner.seed() + static_cast<std::uint64_t>(t))}, n,
                           PrimeField{});
    const int s = pick(rng, 1, k.dim() + 1);
    const Face sface = random_subset(rng, n, s);
    const int i = pick(rng, 1, 2);
    const Face iface = random_subset(rng, n, pick(rng, 1, std::max(1, k.dim())));

    runner.run("kernel triple K=" + k.to_string() + " S=" + sface.to_string(), [&]() -> Outcome {
      const auto delta = shift_with_matrix(k, a);
      const auto full = kernel_intersection_dim(k, a, sface, LexBound::Strict, 0);
      const auto restricted = kernel_intersection_dim(k, a, sface, LexBound::Strict, 0, true);
      std::size_t tail = 0;
      for (Face f : delta.faces_of_size(s)) {
        if (!lex_less(f, sface)) ++tail;
      }
      if (full != restricted || full != tail) {
        return {false, "dims " + std::to_string(full) + ", " + std::to_string(restricted) +
                           ", count " + std::to_string(tail)};
      }
      const auto inclusive = kernel_intersection_dim(k, a, sface, LexBound::Inclusive, 0);
      if ((full > inclusive) != delta.contains(sface)) {
        return {false, "membership criterion disagrees with the engine"};
      }
      return {};
    });

    runner.run("interval K=" + k.to_string() + " S=" + iface.to_string() + " i=" + std::to_string(i),
               [&]() -> Outcome {
                 const auto delta = shift_with_matrix(k, a);
                 std::size_t count = 0;
                 for (Face f : interval(iface, i, n)) count += delta.contains(f) ? 1 : 0;
                 const auto strict = kernel_intersection_dim(k, a, iface, LexBound::Strict, i);
                 const auto incl = kernel_intersection_dim(k, a, iface, LexBound::Inclusive, i);
                 if (strict < incl || strict - incl != count) {
                   return {false, "interval count " + std::to_string(count) + " vs " +
                                      std::to_string(strict) + " - " + std::to_string(incl)};
                 }
                 return {};
               });

    const int h = pick(rng, 1, 5);
    const int hn = pick(rng, h, std::max(h, std::min(runner.max_n(), 7)));
    const Face himage = random_subset(rng, hn, pick(rng, 1, hn));
    runner.run("image h=" + std::to_string(h) + " n=" + std::to_string(hn) +
                   " S=" + himage.to_string(),
               [&]() -> Outcome {
                 const auto complete = SimplicialComplex::complete(hn, Face::range(1, h));
                 const auto ah = realize(GenericSpec{runner.seed() + 1}, hn, PrimeField{});
                 const std::size_t domain = complete.faces_of_size(himage.size() + 1).size();
                 const std::size_t direct =
                     domain - kernel_intersection_dim(complete, ah, himage, LexBound::Strict, 1);
                 const std::size_t closed = image_dim_complete(h, hn, himage);
                 if (direct != closed) {
                   return {false, "closed form " + std::to_string(closed) + " vs rank " +
                                      std::to_string(direct)};
                 }
                 return {};
               });
  }
  return runner.finish();
}

SuiteReport suite_sarkaria(const SuiteOptions& options) {
  require_max_n(options, 1, "sarkaria");
  SuiteRunner runner("sarkaria", options);
  const PrimeField field;
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int n = pick(rng, 1, runner.max_n());
    const auto k = random_near_cone(rng, n, sized_options(n));
    ResidueStream stream(mix_seed(runner.seed() + static_cast<std::uint64_t>(t)), field);
    std::vector<Residue> alphas(static_cast<std::size_t>(n));
    for (auto& x : alphas) x = stream.next_nonzero();
    std::vector<std::vector<Residue>> samples;
    for (int c = 0; c <= k.dim() + 1; ++c) {
      std::vector<Residue> v(k.faces_of_size(c).size());
      for (auto& x : v) x = stream.next();
      samples.push_back(std::move(v));
    }
    runner.run("K=" + k.to_string(), [&]() -> Outcome {
      const auto maps = sarkaria_maps(k, alphas, field);
      std::vector<Residue> e1(static_cast<std::size_t>(n), 0), e(static_cast<std::size_t>(n), 0),
          f(static_cast<std::size_t>(n), 0);
      e1[0] = 1;
      k.vertex_set().for_each_vertex([&](Vertex v) {
        e[static_cast<std::size_t>(v - 1)] = 1;
        f[static_cast<std::size_t>(v - 1)] = alphas[static_cast<std::size_t>(v - 1)];
      });
      for (int c = 0; c <= k.dim() + 1; ++c) {
        const auto size = k.faces_of_size(c).size();
        const auto& u = maps.u[static_cast<std::size_t>(c)];
        const auto& d = maps.d[static_cast<std::size_t>(c)];
        if (u.rows() != size || u.cols() != size || u.rank() != size || d.rank() != size) {
          return {false, "map on cardinality " + std::to_string(c) + " is not a graded isomorphism"};
        }
        // Matrix action against the direct formula on a sample chain.
        const ChainVector x{c, samples[static_cast<std::size_t>(c)]};
        const auto xe = x.to_exterior(k, field);
        const auto ux = ChainVector::from_exterior(k, c, sarkaria_u(k, xe));
        const auto dx = ChainVector::from_exterior(k, c, sarkaria_d(k, alphas, xe));
        FieldMatrix col(field, size, 1);
        for (std::size_t r = 0; r < size; ++r) col(r, 0) = x.coords[r];
        const auto mu = u * col;
        const auto md = d * col;
        for (std::size_t r = 0; r < size; ++r) {
          if (mu(r, 0) != ux.coords[r] || md(r, 0) != dx.coords[r]) {
            return {false, "matrix and element forms differ on cardinality " + std::to_string(c)};
          }
        }
        if (c == 0) continue;
        const auto& u_low = maps.u[static_cast<std::size_t>(c - 1)];
        const auto& d_low = maps.d[static_cast<std::size_t>(c - 1)];
        const auto b_e1 = boundary_matrix(k, e1, c, field);
        const auto b_e = boundary_matrix(k, e, c, field);
        const auto b_f = boundary_matrix(k, f, c, field);
        if (!(u_low * b_e1 == b_e * u)) {
          return {false, "U is not a chain map on cardinality " + std::to_string(c)};
        }
        if (!(d_low * b_e == b_f * d)) {
          return {false, "D is not a chain map on cardinality " + std::to_string(c)};
        }
      }
      return {};
    });
  }
  return runner.finish();
}

SuiteReport suite_join_top(const SuiteOptions& options) {
  require_max_n(options, 2, "join-top");
  SuiteRunner runner("join-top", options);
  for (int t = 0; t < runner.trials(); ++t) {
    auto rng = runner.rng(static_cast<std::size_t>(t));
    const int nk = pick(rng, 1, runner.max_n() - 1);
    const int nl = pick(rng, 1, runner.max_n() - nk);
    const auto k = random_complex(rng, nk, sized_options(nk));
    const auto l = random_complex(rng, nl, sized_options(nl));
    runner.run("K=" + k.to_string() + " L=" + l.to_string(), [&]() -> Outcome {
      const auto joined = join(k, l);
      const auto dj = algebraic_shift(joined, runner.seed());
      const auto dk = algebraic_shift(k, runner.seed());
      const auto dl = algebraic_shift(l, runner.seed());
      for (int i = 1; i <= joined.num_vertices(); ++i) {
        const auto lhs = top_faces_avoiding(dj, i);
        const auto rhs = top_faces_avoiding(dk, i) * top_faces_avoiding(dl, i);
        if (lhs != rhs) {
          return {false, "i=" + std::to_string(i) + ": " + std::to_string(lhs) + " vs " +
                             std::to_string(rhs)};
        }
      }
      return {};
    });
  }
  return runner.finish();
}

SuiteReport suite_counterexample(const SuiteOptions& options) {
  SuiteRunner runner("counterexample", options);
  const auto b = SimplicialComplex::from_facets(4, {Face{1, 2}, Face{3, 4}});
  runner.run("B = two disjoint edges", [&]() -> Outcome {
    const auto lhs = algebraic_shift(suspension(b), runner.seed());
    const auto rhs = algebraic_shift(suspension(algebraic_shift(b, runner.seed())), runner.seed());
    const auto only_lhs = face_difference(lhs, rhs);
    const auto only_rhs = face_difference(rhs, lhs);
    const std::string detail = "only in shift of suspension: " + faces_text(only_lhs) +
                               "; only in the other: " + faces_text(only_rhs);
    const bool ok = only_lhs == std::vector<Face>{Face{1, 2, 6}} &&
                    only_rhs == std::vector<Face>{Face{1, 3, 4}} &&
                    compare_lex(lhs, rhs) == LexComparison::Less;
    return {ok, detail};
  });
  return runner.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "union-eq1", "clique-sum", "disjoint-union", "sqcup",       "cone",     "near-cone",
      "idempotence", "betti",    "kernel-dims",    "sarkaria",    "join-top", "counterexample"};
  return names;
}

std::optional<SuiteReport> run_suite(const std::string& name, const SuiteOptions& options) {
  using Fn = SuiteReport (*)(const SuiteOptions&);
  static const std::map<std::string, Fn> table{
      {"union-eq1", suite_union_eq1},       {"clique-sum", suite_clique_sum},
      {"disjoint-union", suite_disjoint_union}, {"sqcup", suite_sqcup},
      {"cone", suite_cone},                 {"near-cone", suite_near_cone},
      {"idempotence", suite_idempotence},   {"betti", suite_betti},
      {"kernel-dims", suite_kernel_dims},   {"sarkaria", suite_sarkaria},
      {"join-top", suite_join_top},         {"counterexample", suite_counterexample},
  };
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second(options);
}

std::string to_string(ConjectureOutcome outcome) {
  switch (outcome) {
    case ConjectureOutcome::Equal: return "equal";
    case ConjectureOutcome::StrictlyLess: return "strictly-less";
    case ConjectureOutcome::Violation: return "VIOLATION";
  }
  return "unknown";
}

ConjectureOutcome classify_suspension(const SimplicialComplex& k, std::uint64_t seed) {
  const auto lhs = algebraic_shift(suspension(k), seed);
  const auto rhs = algebraic_shift(suspension(algebraic_shift(k, seed)), seed);
  if (lhs == rhs) return ConjectureOutcome::Equal;
  return lex_leq(lhs, rhs) ? ConjectureOutcome::StrictlyLess : ConjectureOutcome::Violation;
}

std::size_t ExploreReport::count(ConjectureOutcome outcome) const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(),
      [&](const ExploreInstance& i) { return i.outcome == outcome; }));
}

ExploreReport explore_conjecture(const SuiteOptions& options) {
  require_max_n(options, 1, "explore");
  if (options.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  ExploreReport report;
  report.options = options;
  for (int t = 0; t < options.trials; ++t) {
    Rng rng(mix_seed(options.seed + static_cast<std::uint64_t>(t)));
    const int n = pick(rng, 1, options.max_n);
    auto k = random_complex(rng, n, sized_options(n));
    const auto outcome = classify_suspension(k, options.seed);
    report.instances.push_back({static_cast<std::size_t>(t), std::move(k), outcome});
  }
  return report;
}

ExploreReport explore_conjecture(const std::vector<SimplicialComplex>& complexes,
                                 std::uint64_t seed) {
  ExploreReport report;
  report.options.seed = seed;
  report.options.trials = static_cast<int>(complexes.size());
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    report.instances.push_back({i, complexes[i], classify_suspension(complexes[i], seed)});
  }
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["suite"] = report.name;
  j["seed"] = report.options.seed;
  j["trials"] = report.options.trials;
  j["max_n"] = report.options.max_n;
  j["passed"] = report.passed();
  j["failures"] = report.failures();
  auto list = nlohmann::json::array();
  for (const auto& inst : report.instances) {
    list.push_back({{"index", inst.index},
                    {"description", inst.description},
                    {"ok", inst.ok},
                    {"detail", inst.detail}});
  }
  j["instances"] = std::move(list);
  return j;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& inst : report.instances) {
    os << (inst.ok ? "[ok]   " : "[FAIL] ") << '#' << inst.index << ' ' << inst.description;
    if (!inst.detail.empty()) os << "  (" << inst.detail << ')';
    os << '\n';
  }
  os << "suite " << report.name << ": " << report.instances.size() - report.failures() << '/'
     << report.instances.size() << " passed\n";
  return os.str();
}

nlohmann::json to_json(const ExploreReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = "explore";
  j["seed"] = report.options.seed;
  j["trials"] = report.options.trials;
  j["max_n"] = report.options.max_n;
  j["equal"] = report.count(ConjectureOutcome::Equal);
  j["strictly_less"] = report.count(ConjectureOutcome::StrictlyLess);
  j["violations"] = report.count(ConjectureOutcome::Violation);
  auto list = nlohmann::json::array();
  for (const auto& inst : report.instances) {
    list.push_back({{"index", inst.index},
                    {"n", inst.complex.n()},
                    {"facets", faces_text(inst.complex.facets())},
                    {"outcome", to_string(inst.outcome)}});
  }
  j["instances"] = std::move(list);
  return j;
}

std::string to_text(const ExploreReport& report) {
  std::ostringstream os;
  for (const auto& inst : report.instances) {
    os << '#' << inst.index << ' ' << inst.complex.to_string() << ": " << to_string(inst.outcome)
       << '\n';
  }
  os << "equal " << report.count(ConjectureOutcome::Equal) << ", strictly-less "
     << report.count(ConjectureOutcome::StrictlyLess) << ", VIOLATION "
     << report.count(ConjectureOutcome::Violation) << '\n';
  return os.str();
}

} // namespace shiftkit::cli
