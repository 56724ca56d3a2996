#pragma once

#include <random>

#include "intens/language.hpp"
#include "intens/process.hpp"

namespace intens {

struct GenOptions {
  int max_depth = 4;
  int max_arity = 3;      // polyadic tuple width
  int max_term_depth = 2; // compound nesting in intensional languages
};

/// Random process conforming to `lang`, deterministic for a given rng state.
Process random_process(const Language& lang, std::mt19937_64& rng,
                       const GenOptions& opts = {});

// Separation witnesses over the dataspace monadic intensional language: a
// minimal exchange pair plus a family of wide outputs and matchers that pin
// down how many names one interaction can test.

/// `(x).<m>`
Process minimal_input();
/// `<a>`
Process minimal_output();
/// `<a1*...*a_{k+2}>` — one term carrying k+2 distinct names.
Process wide_output(int k);
/// `(=a1*...*=a_{k+2}).<m>` — matches all of them in a single interaction.
Process wide_matcher(int k);
/// wide_matcher with position `i` (1-based) testing `m` instead of `a_i`,
/// and continuation `<a_i>`; differs from wide_matcher by one name only and
/// must not interact with wide_output.
Process wide_matcher_swapped(int k, int i);

}  // namespace intens
