#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "intens/conform.hpp"
#include "intens/language.hpp"
#include "intens/process.hpp"

namespace intens {

struct ParseOptions {
  /// Accept `#`-prefixed names. Off for user-facing input; the reserved
  /// namespace belongs to the encodings and fresh-name machinery.
  bool allow_reserved = false;
};

/// Syntax, reserved-name, or well-formedness error with source position
/// (1-based line and column).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Parsed process that is not a term of the requested language.
class ConformanceError : public std::runtime_error {
 public:
  explicit ConformanceError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Grammar: `0`, `ok`, `P | Q` (lowest precedence, left-assoc), `new a.P`,
/// `!P`, `if s = t then P [else Q]`, dataspace output `<t,...>[.P]`, channel
/// output `'s<t,...>[.P]`, dataspace input `(p,...).P`, channel input
/// `s(p,...).P` (compound channels quoted: `'(s*t)(p,...).P`), term compound
/// `*` (left-assoc), name-match `=`.
Process parse_process(std::string_view text, const Language& lang,
                      const ParseOptions& opts = {});

/// Parses without checking membership in any language; for tooling and
/// tests that assemble processes across language boundaries.
Process parse_process_unchecked(std::string_view text, const ParseOptions& opts = {});

Term parse_term(std::string_view text, const ParseOptions& opts = {});
Pattern parse_pattern(std::string_view text, const ParseOptions& opts = {});

}  // namespace intens
