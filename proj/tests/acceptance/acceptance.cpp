// Acceptance run: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "shiftkit/cli/suites.hpp"
#include "shiftkit/generators.hpp"
#include "shiftkit/homology.hpp"
#include "shiftkit/operators.hpp"
#include "shiftkit/shift.hpp"

using namespace shiftkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;
};

/// Collects the first few failures of a property run.
class Tally {
public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t checked() const { return checked_; }
  Verdict verdict(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    return {false, std::to_string(failed_) + " of " + std::to_string(checked_) + " failed: " + first_};
  }

private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SimplicialComplex two_edges() { return SimplicialComplex::from_facets(4, {Face{1, 2}, Face{3, 4}}); }

SimplicialComplex octahedron_graph() {
  std::vector<Face> edges;
  for (Vertex a = 1; a <= 6; ++a) {
    for (Vertex b = a + 1; b <= 6; ++b) {
      if (b - a != 3) edges.push_back(Face{a, b});
    }
  }
  return SimplicialComplex::from_facets(6, edges);
}

SimplicialComplex k33() {
  std::vector<Face> edges;
  for (Vertex a = 1; a <= 3; ++a) {
    for (Vertex b = 4; b <= 6; ++b) edges.push_back(Face{a, b});
  }
  return SimplicialComplex::from_facets(6, edges);
}

std::string faces_text(const std::vector<Face>& faces) {
  std::string out = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) out += (i ? " " : "") + faces[i].to_string();
  return out + "}";
}

Verdict suite_verdict(const cli::SuiteReport& report) {
  Tally tally;
  for (const auto& inst : report.instances) tally.check(inst.ok, inst.description + " " + inst.detail);
  return tally.verdict(std::to_string(report.instances.size()) + " instances");
}

Verdict counterexample() {
  const auto start = Clock::now();
  const auto b = two_edges();
  const auto lhs = algebraic_shift(suspension(b));
  const auto rhs = algebraic_shift(suspension(algebraic_shift(b)));
  const auto only_lhs = face_difference(lhs, rhs);
  const auto only_rhs = face_difference(rhs, lhs);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const bool ok = only_lhs == std::vector<Face>{Face{1, 2, 6}} &&
                  only_rhs == std::vector<Face>{Face{1, 3, 4}} && ms < 1000.0;
  return {ok, "differences " + faces_text(only_lhs) + " / " + faces_text(only_rhs) + ", " +
                  std::to_string(ms) + " ms"};
}

Verdict octahedron() {
  const auto start = Clock::now();
  const auto g = octahedron_graph();
  Tally tally;
  tally.check(!algebraic_shift(g).contains(Face{4, 5}), "{4,5} in shift of G");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto x = exterior_shift(g, BlockGenericSpec{3, 3, seed}).shifted;
    tally.check(algebraic_shift(x).contains(Face{4, 5}),
                "seed " + std::to_string(seed) + ": {4,5} missing after block then generic");
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  tally.check(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  return tally.verdict("5 block seeds, " + std::to_string(ms) + " ms");
}

Verdict k33_face() {
  Tally tally;
  tally.check(algebraic_shift(k33()).contains(Face{3, 4}), "{3,4} not in shift of K33");
  std::vector<Face> three{Face{1}, Face{2}, Face{3}};
  const auto p = SimplicialComplex::from_facets(3, three);
  std::string counts;
  for (int i = 1; i <= 6; ++i) {
    const auto pair = join_top_count_check(p, p, i);
    tally.check(pair.holds(), "i=" + std::to_string(i));
    counts += (i > 1 ? "," : "") + std::to_string(pair.lhs);
  }
  return tally.verdict("top counts avoiding [i]: " + counts);
}

Verdict preservation() {
  Tally tally;
  auto check = [&](const SimplicialComplex& k, std::uint64_t seed) {
    const auto delta = algebraic_shift(k, seed);
    tally.check(delta.f_vector() == k.f_vector(), "f-vector of " + k.to_string());
    tally.check(betti_from_shifted(delta) == betti_direct(k), "betti of " + k.to_string());
  };
  std::size_t exhaustive = 0;
  for (const auto& k : all_complexes(4)) {
    check(k, kDefaultSeed);
    ++exhaustive;
  }
  Rng rng(0xacce);
  for (int t = 0; t < 250; ++t) {
    const int n = pick(rng, 1, 9);
    check(random_complex(rng, n, {pick(rng, 1, 7), pick(rng, 1, 4)}), rng());
  }
  return tally.verdict(std::to_string(exhaustive) + " exhaustive + 250 random complexes");
}

Verdict idempotence() {
  Tally tally;
  Rng rng(0x1de);
  for (int t = 0; t < 120; ++t) {
    const int n = pick(rng, 1, 9);
    const auto k = random_complex(rng, n, {pick(rng, 1, 6), pick(rng, 1, 4)});
    const auto delta = algebraic_shift(k, 11);
    tally.check(algebraic_shift(delta, 12) == delta, "second shift of " + k.to_string());
    for (int p = 0; p < 5; ++p) {
      tally.check(algebraic_shift(k.relabeled(random_permutation(rng, n), n), 13 + p) == delta,
                  "relabeled " + k.to_string());
    }
    tally.check(algebraic_shift(k, mix_seed(static_cast<std::uint64_t>(t))) == delta,
                "second seed on " + k.to_string());
  }
  return tally.verdict("120 instances, 5 relabelings each");
}

Verdict union_formula() {
  cli::SuiteOptions options;
  options.trials = 40;
  options.max_n = 9;
  options.seed = 0xe41;
  return suite_verdict(cli::suite_union_eq1(options));
}

Verdict union_shifts() {
  Tally tally;
  // Exhaustive: every labeled pair of complexes on at most 4 vertices.
  std::vector<SimplicialComplex> small;
  for (const auto& k : all_complexes(4)) small.push_back(k.compacted());
  std::vector<SimplicialComplex> shifted(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) shifted[i] = algebraic_shift(small[i]);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = 0; j < small.size(); ++j) {
      const auto u = disjoint_union(small[i], small[j]);
      if (u.num_vertices() == 0) continue;
      const auto engine = algebraic_shift(u);
      const std::string label = small[i].to_string() + " + " + small[j].to_string();
      tally.check(disjoint_union_shift(shifted[i], shifted[j], u.n()) == engine, "gap test " + label);
      tally.check(shifted_union_recursive(shifted[i], shifted[j]) == engine, "recursion " + label);
      ++pairs;
    }
  }
  // Exhaustive clique sums over isomorphism classes and every gluing.
  const auto classes = complex_classes(4);
  std::size_t gluings = 0;
  for (const auto& k : classes) {
    for (const auto& l : classes) {
      const auto dk = algebraic_shift(k);
      const auto dl = algebraic_shift(l);
      for (int d = -1; d <= std::min(k.dim(), l.dim()); ++d) {
        for (Face sk : k.faces_of_size(d + 1)) {
          for (Face sl : l.faces_of_size(d + 1)) {
            const auto glued = clique_sum(k, l, sk, sl);
            if (glued.num_vertices() == 0) continue;
            tally.check(clique_sum_shift(dk, dl, d, glued.n()) == algebraic_shift(glued),
                        "clique sum d=" + std::to_string(d) + " " + k.to_string() + " " +
                            l.to_string());
            ++gluings;
          }
        }
      }
    }
  }
  // Random pairs up to 10 vertices in total.
  Rng rng(0x7);
  for (int t = 0; t < 150; ++t) {
    const int nk = pick(rng, 1, 9);
    const int nl = pick(rng, 1, 10 - nk);
    const auto k = random_complex(rng, nk, {pick(rng, 1, 5), pick(rng, 1, 4)});
    const auto l = random_complex(rng, nl, {pick(rng, 1, 5), pick(rng, 1, 4)});
    const auto dk = algebraic_shift(k);
    const auto dl = algebraic_shift(l);
    const auto u = disjoint_union(k, l);
    const auto engine = algebraic_shift(u);
    tally.check(disjoint_union_shift(dk, dl, u.n()) == engine, "random gap test");
    tally.check(shifted_union_recursive(dk, dl) == engine, "random recursion");
    const int d = pick(rng, -1, std::min(k.dim(), l.dim()));
    const auto fk = k.faces_of_size(d + 1);
    const auto fl = l.faces_of_size(d + 1);
    const Face sk = fk[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(fk.size()) - 1))];
    const Face sl = fl[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(fl.size()) - 1))];
    const auto glued = clique_sum(k, l, sk, sl);
    tally.check(clique_sum_shift(dk, dl, d, glued.n()) == algebraic_shift(glued), "random clique sum");
  }
  return tally.verdict(std::to_string(pairs) + " labeled pairs, " + std::to_string(gluings) +
                       " gluings, 150 random");
}

Verdict near_cones() {
  Tally tally;
  Rng rng(0x9c);
  for (int t = 0; t < 60; ++t) {
    const int n = pick(rng, 2, 9);
    const auto k = random_near_cone(rng, n, {pick(rng, 1, 5), pick(rng, 1, 4)});
    tally.check(near_cone_decomposition_check(k, 1), "decomposition " + k.to_string());
    const auto base = random_complex(rng, n - 1, {pick(rng, 1, 5), pick(rng, 1, 3)});
    tally.check(algebraic_shift(cone(base, 1)) == cone(algebraic_shift(base), 1),
                "cone of " + base.to_string());
  }
  for (int t = 0; t < 60; ++t) {
    const auto s = random_shifted(rng, pick(rng, 1, 9), {pick(rng, 1, 5), pick(rng, 1, 4)});
    const auto analysis = near_cone_analyze(s);
    tally.check(!analysis.refused_at &&
                    analysis.certificate.length() == static_cast<std::size_t>(s.num_vertices()),
                "certificate of " + s.to_string());
    tally.check(near_cone_certificate_check(s, analysis.certificate), "iterated " + s.to_string());
  }
  return tally.verdict("60 near cones and cones, 60 full certificates");
}

Verdict kernel_oracles() {
  cli::SuiteOptions options;
  options.trials = 40;
  options.max_n = 8;
  options.seed = 0x3a;
  auto verdict = suite_verdict(cli::suite_kernel_dims(options));
  if (!verdict.ok) return verdict;
  Tally tally;
  const PrimeField field;
  for (int h = 1; h <= 5; ++h) {
    for (int n = h; n <= 7; ++n) {
      const auto complete = SimplicialComplex::complete(n, Face::range(1, h));
      const auto a = realize(GenericSpec{static_cast<std::uint64_t>(100 * h + n)}, n, field);
      for (int s = 1; s <= std::min(n, h + 1); ++s) {
        for (Face sf : subsets_lex(n, s)) {
          const auto domain = complete.faces_of_size(s + 1).size();
          const auto rank = domain - kernel_intersection_dim(complete, a, sf, LexBound::Strict, 1);
          tally.check(rank == image_dim_complete(h, n, sf),
                      "h=" + std::to_string(h) + " n=" + std::to_string(n) + " S=" + sf.to_string());
        }
      }
    }
  }
  return tally.verdict(verdict.detail + " + " + std::to_string(tally.checked()) +
                       " closed-form cases");
}

Verdict sarkaria() {
  cli::SuiteOptions options;
  options.trials = 30;
  options.max_n = 8;
  options.seed = 0x5a;
  return suite_verdict(cli::suite_sarkaria(options));
}

Verdict exploration() {
  cli::SuiteOptions options;
  options.trials = 100;
  options.max_n = 8;
  const auto report = cli::explore_conjecture(options);
  const auto violations = report.count(cli::ConjectureOutcome::Violation);
  const auto b = cli::classify_suspension(two_edges());
  return {violations == 0 && b == cli::ConjectureOutcome::StrictlyLess,
          std::to_string(report.instances.size()) + " complexes, " + std::to_string(violations) +
              " violations, " + std::to_string(report.count(cli::ConjectureOutcome::StrictlyLess)) +
              " strict; two edges: " + cli::to_string(b)};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"counterexample reproduction", counterexample},
      {"octahedron block example", octahedron},
      {"K3,3 face and join counts", k33_face},
      {"f-vector and Betti preservation", preservation},
      {"idempotence and canonicity", idempotence},
      {"additive union formula", union_formula},
      {"union, recursion and clique-sum shifts", union_shifts},
      {"near-cone suite", near_cones},
      {"kernel and image oracles", kernel_oracles},
      {"Sarkaria chain maps", sarkaria},
      {"suspension conjecture exploration", exploration},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    failures += v.ok ? 0 : 1;
    std::printf("[%s] %2zu %-40s %7.2fs  %s\n", v.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), s, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
