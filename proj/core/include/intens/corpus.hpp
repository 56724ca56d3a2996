#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "intens/language.hpp"
#include "intens/process.hpp"

namespace intens {

/// A named, language-tagged process, as stored in corpus files.
struct SourceUnit {
  std::string name;
  Language language;
  Process body;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line-oriented corpus format: `#` comment lines, blank lines, and
/// `unit <name> @ <LANG> := <process-text>` entries. Every unit is parsed
/// and conformance-checked; errors name the offending unit.
std::vector<SourceUnit> load_corpus(const std::filesystem::path& path);

/// Same format, from an in-memory string (tests, pipes).
std::vector<SourceUnit> parse_corpus(std::string_view text,
                                     const std::string& origin = "<corpus>");

std::string to_corpus_line(const SourceUnit& unit);

}  // namespace intens
