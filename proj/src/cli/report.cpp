#include "shiftkit/cli/report.hpp"

#include <sstream>

#include "shiftkit/cli/io.hpp"

namespace shiftkit::cli {

nlohmann::json faces_json(const SimplicialComplex& k) {
  auto levels = nlohmann::json::array();
  for (int c = 0; c <= k.dim() + 1; ++c) {
    auto level = nlohmann::json::array();
    for (Face f : k.faces_of_size(c)) level.push_back(f.vertices());
    levels.push_back(std::move(level));
  }
  return levels;
}

nlohmann::json to_json(const ComplexReport& report) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["command"] = report.command;
  j["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
  j["prime"] = report.prime;
  if (!report.matrix.empty()) j["matrix"] = report.matrix;
  j["n"] = report.complex.n();
  j["faces"] = faces_json(report.complex);
  j["f_vector"] = report.complex.f_vector().counts;
  j["betti"] = report.betti ? nlohmann::json(report.betti->values) : nlohmann::json(nullptr);
  if (report.validated) {
    j["validated"] = {{"is_shifted", report.validated->is_shifted},
                      {"f_vector_preserved", report.validated->f_vector_preserved}};
  } else {
    j["validated"] = nullptr;
  }
  j["retries"] = report.retries;
  j["timing_ms"] = report.timing_ms;
  return j;
}

std::string to_text(const ComplexReport& report) {
  std::ostringstream os;
  os << "# command: " << report.command << '\n';
  if (report.seed) os << "# seed: " << *report.seed << '\n';
  os << "# prime: " << report.prime << '\n';
  if (!report.matrix.empty()) os << "# matrix: " << report.matrix << '\n';
  os << "# f-vector: " << report.complex.f_vector().to_string() << '\n';
  if (report.betti) os << "# betti: " << report.betti->to_string() << '\n';
  if (report.validated) {
    os << "# shifted: " << (report.validated->is_shifted ? "yes" : "no")
       << "  f-vector preserved: " << (report.validated->f_vector_preserved ? "yes" : "no")
       << "  retries: " << report.retries << '\n';
  }
  for (int c = 1; c <= report.complex.dim() + 1; ++c) {
    os << "# dim " << c - 1 << ':';
    for (Face f : report.complex.faces_of_size(c)) os << ' ' << f.to_string();
    os << '\n';
  }
  os << format_complex(report.complex);
  return os.str();
}

} // namespace shiftkit::cli
