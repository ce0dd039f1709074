#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shiftkit/complex.hpp"

namespace shiftkit::cli {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string source, std::size_t line, const std::string& message);
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

/// Facet-list text: one facet per line as whitespace-separated labels,
/// '#' comments, an optional "n=<count>" header, and "{}" for the empty
/// facet. n defaults to the largest label seen.
SimplicialComplex parse_complex(std::string_view text, const std::string& source = "<input>");

/// Reads `path`, or standard input when `path` is "-".
SimplicialComplex read_complex_file(const std::string& path);

/// Inverse of parse_complex: the header line followed by the facets in
/// (cardinality, lex) order.
std::string format_complex(const SimplicialComplex& k);

} // namespace shiftkit::cli
