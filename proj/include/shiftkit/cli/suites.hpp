#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shiftkit/complex.hpp"
#include "shiftkit/shift.hpp"

namespace shiftkit::cli {

struct SuiteOptions {
  int trials = 20;
  int max_n = 8;
  std::uint64_t seed = kDefaultSeed;
};

struct Instance {
  std::size_t index = 0;
  std::string description;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  SuiteOptions options;
  std::vector<Instance> instances;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

const std::vector<std::string>& suite_names();

/// Empty for an unknown suite name.
std::optional<SuiteReport> run_suite(const std::string& name, const SuiteOptions& options);

SuiteReport suite_union_eq1(const SuiteOptions& options);
SuiteReport suite_clique_sum(const SuiteOptions& options);
SuiteReport suite_disjoint_union(const SuiteOptions& options);
SuiteReport suite_sqcup(const SuiteOptions& options);
SuiteReport suite_cone(const SuiteOptions& options);
SuiteReport suite_near_cone(const SuiteOptions& options);
SuiteReport suite_idempotence(const SuiteOptions& options);
SuiteReport suite_betti(const SuiteOptions& options);
SuiteReport suite_kernel_dims(const SuiteOptions& options);
SuiteReport suite_sarkaria(const SuiteOptions& options);
SuiteReport suite_join_top(const SuiteOptions& options);
SuiteReport suite_counterexample(const SuiteOptions& options);

enum class ConjectureOutcome { Equal, StrictlyLess, Violation };

std::string to_string(ConjectureOutcome outcome);

/// Compares Δ(Σ(K)) with Δ(Σ(Δ(K))) in the lex order on complexes.
ConjectureOutcome classify_suspension(const SimplicialComplex& k,
                                      std::uint64_t seed = kDefaultSeed);

struct ExploreInstance {
  std::size_t index = 0;
  SimplicialComplex complex;
  ConjectureOutcome outcome = ConjectureOutcome::Equal;
};

struct ExploreReport {
  SuiteOptions options;
  std::vector<ExploreInstance> instances;
  std::size_t count(ConjectureOutcome outcome) const;
};

/// Random complexes with 1 <= n <= max_n.
ExploreReport explore_conjecture(const SuiteOptions& options);
/// The given complexes, in order.
ExploreReport explore_conjecture(const std::vector<SimplicialComplex>& complexes,
                                 std::uint64_t seed = kDefaultSeed);

nlohmann::json to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);
nlohmann::json to_json(const ExploreReport& report);
std::string to_text(const ExploreReport& report);

} // namespace shiftkit::cli
