#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intens/pattern.hpp"

namespace intens {

enum class Synchronism { asynchronous, synchronous };
enum class DataArity { monadic, polyadic };
enum class Medium { dataspace, channel };

/// One of the 24 languages, as a 4-feature coordinate. The 4-letter code
/// spells synchronism/arity/medium/matching, with NO written `O` and NM
/// written `N`: AMDI, SPCN, ...
struct Language {
  Synchronism synchronism;
  DataArity arity;
  Medium medium;
  MatchDegree matching;

  friend bool operator==(const Language&, const Language&) = default;
};

/// Componentwise order: A<=S, M<=P, D<=C, NO<=NM<=I. The lesser language is
/// a special case of the greater one.
bool leq(Language a, Language b);

std::string code(const Language& l);
std::optional<Language> language_from_code(std::string_view code);

/// All 24 languages in code order (A before S, M before P, D before C,
/// O before N before I).
const std::vector<Language>& all_languages();

}  // namespace intens
