#pragma once

// Test-side oracles, independent of the library's matching path: the
// brute-force matcher enumerates candidate substitutions and checks them by
// instantiation instead of recursing the way match_one does.

#include <optional>
#include <vector>

#include "intens/match.hpp"

namespace intens::testing {

/// Replaces binding names by their images and erases name-match markers;
/// nullopt when a binding name has no image.
std::optional<Term> instantiate(const Pattern& p, const Substitution& s);

/// Enumerate-and-check matcher: tries every assignment of subterms of `t`
/// to the binding names of `p` and keeps the one whose instantiation equals
/// `t` exactly.
std::optional<Substitution> oracle_match(const Term& t, const Pattern& p);

/// All terms of depth <= max_depth (a leaf has depth 1) over the alphabet.
std::vector<Term> all_terms(int max_depth, const std::vector<Name>& alphabet);

/// All well-formed patterns of depth <= max_depth with the given binding and
/// name-match atoms.
std::vector<Pattern> all_patterns(int max_depth, const std::vector<Name>& binders,
                                  const std::vector<Name>& matches);

}  // namespace intens::testing
