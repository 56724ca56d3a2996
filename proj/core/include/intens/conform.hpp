#pragma once

#include <string>
#include <vector>

#include "intens/language.hpp"
#include "intens/process.hpp"

namespace intens {

/// One way a process fails to be a term of a language. `path` locates the
/// offending subprocess ("/par[0]/output" style).
struct Violation {
  std::string path;
  std::string message;
};

struct ConformOptions {
  /// Restrict conditional operands to single names outside the intensional
  /// languages (the grammar writes terms; non-intensional data is names).
  bool names_only_cond = true;
};

std::vector<Violation> conformance_violations(const Process& p, const Language& l,
                                              const ConformOptions& opts = {});

inline bool conforms(const Process& p, const Language& l,
                     const ConformOptions& opts = {}) {
  return conformance_violations(p, l, opts).empty();
}

std::string describe(const std::vector<Violation>& violations);

}  // namespace intens
