#include "shiftkit/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "shiftkit/cli/io.hpp"
#include "shiftkit/cli/report.hpp"
#include "shiftkit/cli/suites.hpp"
#include "shiftkit/homology.hpp"
#include "shiftkit/operators.hpp"

namespace shiftkit::cli {
namespace {

constexpr int kDefaultMaxN = 8;
constexpr int kDefaultMaxNCap = 16;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int max_n_cap() {
  if (const char* env = std::getenv("SHIFTKIT_MAX_N_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return std::min(cap, kMaxVertices);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxNCap;
}

int clamp_max_n(int requested, std::ostream& err) {
  const int cap = max_n_cap();
  if (requested > cap) {
    err << "warning: --max-n " << requested << " clamped to " << cap
        << " (set SHIFTKIT_MAX_N_CAP to raise the cap)\n";
    return cap;
  }
  return requested;
}

Face parse_face_arg(const std::string& text) {
  Face f;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    for (char& c : token) {
      if (c == ',' || c == '{' || c == '}') c = ' ';
    }
    std::istringstream parts(token);
    int v = 0;
    while (parts >> v) {
      if (v < 1 || v > kMaxVertices) throw std::invalid_argument("face label out of range");
      f = f.with(v);
    }
  }
  return f;
}

BettiVector betti_for(const SimplicialComplex& k, bool shifted, const PrimeField& field) {
  return shifted ? betti_from_shifted(k) : betti_direct(k, field);
}

void emit(const ComplexReport& report, bool json, std::ostream& out) {
  if (json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
}

struct CommonFlags {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t prime = kDefaultPrime;
  bool json = false;
};

int cmd_shift(const std::string& input, const std::string& matrix, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const PrimeField field(flags.prime);
  const auto k = read_complex_file(input);
  if (k.is_empty()) {
    err << "error: the empty complex cannot be shifted\n";
    return kExitUsage;
  }
  const auto spec = parse_matrix_spec(matrix, flags.seed);
  ShiftOptions options;
  options.field = field;
  try {
    const auto result = exterior_shift(k, spec, options);
    ComplexReport report;
    report.command = "shift";
    report.complex = result.shifted;
    report.seed = result.seed_used;
    report.prime = field.prime();
    report.matrix = describe(result.spec_used);
    report.betti = betti_for(result.shifted, result.validated.is_shifted, field);
    report.validated = result.validated;
    report.retries = result.retries;
    report.timing_ms = elapsed_ms(start);
    emit(report, flags.json, out);
    return kExitOk;
  } catch (const ShiftValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
}

int cmd_op(const std::string& kind, const std::vector<std::string>& files, Vertex apex,
           const std::string& face, int d, const CommonFlags& flags, std::ostream& out,
           std::ostream& err) {
  const auto start = Clock::now();
  const PrimeField field(flags.prime);
  std::vector<SimplicialComplex> operands;
  for (const auto& f : files) operands.push_back(read_complex_file(f));
  auto need = [&](std::size_t count) {
    if (operands.size() != count) {
      throw std::invalid_argument("op " + kind + " takes " + std::to_string(count) +
                                  " file(s), got " + std::to_string(operands.size()));
    }
  };

  ComplexReport report;
  report.command = "op " + kind;
  report.prime = field.prime();

  if (kind == "near-cone") {
    need(1);
    const auto analysis = near_cone_analyze(operands[0]);
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["command"] = report.command;
    j["apexes"] = analysis.certificate.apexes;
    j["refused_at"] = analysis.refused_at ? nlohmann::json(*analysis.refused_at)
                                          : nlohmann::json(nullptr);
    j["timing_ms"] = elapsed_ms(start);
    if (flags.json) {
      out << j.dump(2) << '\n';
    } else {
      out << "apexes:";
      for (Vertex v : analysis.certificate.apexes) out << ' ' << v;
      out << '\n';
      if (analysis.refused_at) out << "refused at level " << *analysis.refused_at << '\n';
    }
    return kExitOk;
  }

  if (kind == "betti") {
    need(1);
    if (operands[0].is_empty()) throw std::invalid_argument("betti of the empty complex");
    report.complex = operands[0];
    report.betti = betti_direct(operands[0], field);
  } else if (kind == "sqcup") {
    need(2);
    report.complex = shifted_union_recursive(operands[0], operands[1]);
    report.betti = betti_from_shifted(report.complex);
  } else if (kind == "gap-union") {
    need(2);
    report.complex = disjoint_union_shift(operands[0], operands[1],
                                          operands[0].n() + operands[1].n());
    report.betti = betti_from_shifted(report.complex);
  } else if (kind == "clique-sum-shift") {
    need(2);
    const int n = operands[0].num_vertices() + operands[1].num_vertices() - (d + 1);
    report.complex = clique_sum_shift(operands[0], operands[1], d, n);
    report.betti = betti_from_shifted(report.complex);
  } else if (const auto combine_kind = parse_combine_kind(kind)) {
    CombineArgs args;
    args.kind = *combine_kind;
    args.apex = apex;
    args.face = parse_face_arg(face);
    const bool binary = args.kind == CombineKind::DisjointUnion ||
                        args.kind == CombineKind::Union || args.kind == CombineKind::Join;
    need(binary ? 2 : 1);
    report.complex = combine(args, operands[0], binary ? &operands[1] : nullptr);
    if (!report.complex.is_empty()) report.betti = betti_direct(report.complex, field);
  } else {
    err << "error: unknown op kind '" << kind << "'\n";
    return kExitUsage;
  }
  report.timing_ms = elapsed_ms(start);
  emit(report, flags.json, out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, SuiteOptions options, bool json, std::ostream& out,
               std::ostream& err) {
  options.max_n = clamp_max_n(options.max_n, err);
  const auto start = Clock::now();
  const auto report = run_suite(suite, options);
  if (!report) {
    err << "error: unknown suite '" << suite << "'; known suites:";
    for (const auto& name : suite_names()) err << ' ' << name;
    err << '\n';
    return kExitUsage;
  }
  if (json) {
    auto j = to_json(*report);
    j["timing_ms"] = elapsed_ms(start);
    out << j.dump(2) << '\n';
  } else {
    out << to_text(*report);
  }
  return report->passed() ? kExitOk : kExitViolation;
}

int cmd_explore(const std::vector<std::string>& files, SuiteOptions options, bool json,
                std::ostream& out, std::ostream& err) {
  options.max_n = clamp_max_n(options.max_n, err);
  const auto start = Clock::now();
  ExploreReport report;
  if (files.empty()) {
    report = explore_conjecture(options);
  } else {
    std::vector<SimplicialComplex> complexes;
    for (const auto& f : files) complexes.push_back(read_complex_file(f));
    report = explore_conjecture(complexes, options.seed);
  }
  if (json) {
    auto j = to_json(report);
    j["timing_ms"] = elapsed_ms(start);
    out << j.dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  if (const auto violations = report.count(ConjectureOutcome::Violation)) {
    err << "!!! " << violations << " VIOLATION(S) of the suspension conjecture found\n";
  }
  return kExitOk;
}

} // namespace

ExplicitSpec parse_explicit_matrix(const std::string& text) {
  ExplicitSpec spec;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row_in(line);
    std::vector<std::int64_t> row;
    std::string token;
    while (row_in >> token) {
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw std::invalid_argument("bad matrix entry '" + token + "'");
      row.push_back(value);
    }
    if (!row.empty()) spec.entries.push_back(std::move(row));
  }
  return spec;
}

MatrixSpec parse_matrix_spec(const std::string& text, std::uint64_t seed) {
  if (text == "generic") return GenericSpec{seed};
  if (text.starts_with("block:")) {
    const auto body = text.substr(6);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("block spec needs k,l");
    try {
      std::size_t u1 = 0, u2 = 0;
      const int upper = std::stoi(body.substr(0, comma), &u1);
      const int lower = std::stoi(body.substr(comma + 1), &u2);
      if (u1 != comma || u2 != body.size() - comma - 1 || upper < 0 || lower < 0) {
        throw std::invalid_argument("bad block sizes");
      }
      return BlockGenericSpec{upper, lower, seed};
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed block spec '" + text + "'");
    }
  }
  if (text.starts_with("explicit:")) return parse_explicit_matrix(read_text(text.substr(9)));
  throw std::invalid_argument("unknown matrix spec '" + text + "'");
}

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exterior algebraic shifting of simplicial complexes", "shiftkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input;
  std::string matrix = "generic";
  auto* shift = app.add_subcommand("shift", "Shift a complex given as a facet file");
  shift->add_option("input", input, "Facet file, or - for standard input")->required();
  shift->add_option("--seed", flags.seed, "Seed for random matrices");
  shift->add_option("--prime", flags.prime, "Field characteristic (a prime below 2^62)");
  shift->add_option("--matrix", matrix, "generic | block:k,l | explicit:<file>");
  shift->add_flag("--json", flags.json, "JSON report");

  std::string kind;
  std::vector<std::string> op_files;
  Vertex apex = 1;
  std::string face;
  int d = -1;
  auto* op = app.add_subcommand("op", "Constructions and shifted-union formulas");
  op->add_option("kind", kind,
                 "disjoint-union | union | join | cone | suspension | link | antistar | sqcup | "
                 "gap-union | clique-sum-shift | betti | near-cone")
      ->required();
  op->add_option("files", op_files, "Operand facet files")->required();
  op->add_option("--apex", apex, "Cone apex label");
  op->add_option("--face", face, "Face for link and antistar, e.g. \"1 2\"");
  op->add_option("--d", d, "Dimension of the shared simplex for clique-sum-shift");
  op->add_option("--prime", flags.prime, "Field characteristic");
  op->add_flag("--json", flags.json, "JSON report");

  std::string suite;
  SuiteOptions suite_options;
  suite_options.max_n = kDefaultMaxN;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--trials", suite_options.trials, "Random instances");
  verify->add_option("--max-n", suite_options.max_n, "Largest vertex count");
  verify->add_option("--seed", suite_options.seed, "Seed");
  verify->add_flag("--json", flags.json, "JSON report");

  std::vector<std::string> explore_files;
  SuiteOptions explore_options;
  explore_options.max_n = kDefaultMaxN;
  explore_options.trials = 100;
  auto* explore = app.add_subcommand(
      "explore", "Compare shift of suspension with shift of suspension of the shift");
  explore->add_option("files", explore_files, "Complexes to test instead of random ones");
  explore->add_option("--trials", explore_options.trials, "Random instances");
  explore->add_option("--max-n", explore_options.max_n, "Largest vertex count");
  explore->add_option("--seed", explore_options.seed, "Seed");
  explore->add_flag("--json", flags.json, "JSON report");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*shift) return cmd_shift(input, matrix, flags, out, err);
    if (*op) return cmd_op(kind, op_files, apex, face, d, flags, out, err);
    if (*verify) return cmd_verify(suite, suite_options, flags.json, out, err);
    if (*explore) return cmd_explore(explore_files, explore_options, flags.json, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace shiftkit::cli
