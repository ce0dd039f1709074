#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "shiftkit/complex.hpp"
#include "shiftkit/homology.hpp"
#include "shiftkit/shift.hpp"

namespace shiftkit::cli {

inline constexpr int kSchemaVersion = 1;

/// Everything printed for a single resulting complex.
struct ComplexReport {
  std::string command;
  SimplicialComplex complex;
  std::optional<std::uint64_t> seed;
  std::uint64_t prime = kDefaultPrime;
  std::string matrix;
  std::optional<BettiVector> betti;
  std::optional<ShiftValidation> validated;
  int retries = 0;
  double timing_ms = 0.0;
};

nlohmann::json faces_json(const SimplicialComplex& k);
nlohmann::json to_json(const ComplexReport& report);

/// '#' comment lines with the report fields followed by the complex in
/// facet-file form, so the output can be read back as input.
std::string to_text(const ComplexReport& report);

} // namespace shiftkit::cli
