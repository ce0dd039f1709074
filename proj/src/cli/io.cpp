#include "shiftkit/cli/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace shiftkit::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long parse_number(std::string_view token, const std::string& source, std::size_t line) {
  long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(source, line, "expected a positive integer, got '" + std::string(token) + "'");
  }
  return value;
}

} // namespace

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)), line_(line) {}

SimplicialComplex parse_complex(std::string_view text, const std::string& source) {
  std::vector<Face> facets;
  long declared_n = -1;
  int max_label = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.starts_with("n=")) {
      if (declared_n >= 0) throw ParseError(source, line_no, "duplicate n= header");
      if (!facets.empty()) throw ParseError(source, line_no, "n= header after facet lines");
      declared_n = parse_number(trim(line.substr(2)), source, line_no);
      if (declared_n < 0 || declared_n > kMaxVertices) {
        throw ParseError(source, line_no, "n must lie in 0..64");
      }
      continue;
    }
    if (line == "{}") {
      facets.push_back(Face{});
      continue;
    }
    Face facet;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      const long label = parse_number(line.substr(i, j - i), source, line_no);
      if (label < 1 || label > kMaxVertices) {
        throw ParseError(source, line_no, "label " + std::to_string(label) + " outside 1..64");
      }
      if (facet.contains(static_cast<Vertex>(label))) {
        throw ParseError(source, line_no, "repeated label " + std::to_string(label));
      }
      facet = facet.with(static_cast<Vertex>(label));
      max_label = std::max(max_label, static_cast<int>(label));
      i = j;
    }
    facets.push_back(facet);
  }
  const int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_label;
  if (max_label > n) {
    throw ParseError(source, line_no, "label " + std::to_string(max_label) + " exceeds n=" +
                                          std::to_string(n));
  }
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    buffer << in.rdbuf();
  }
  return parse_complex(buffer.str(), path);
}

std::string format_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "n=" << k.n() << '\n';
  for (Face f : k.facets()) {
    if (f.empty()) {
      os << "{}\n";
      continue;
    }
    bool first = true;
    f.for_each_vertex([&](Vertex v) {
      if (!first) os << ' ';
      os << v;
      first = false;
    });
    os << '\n';
  }
  return os.str();
}

} // namespace shiftkit::cli
