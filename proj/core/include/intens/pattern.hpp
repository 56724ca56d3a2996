#pragma once

#include <memory>
#include <set>
#include <string>

#include "intens/term.hpp"

namespace intens {

/// Pattern-matching degree of a language, ordered NO < NM < I.
enum class MatchDegree { no_matching, name_matching, intensional };

/// Input-side shape matched against communicated terms. Three forms:
/// a binding name `x`, a name-match `=a`, or a compound `p*q`.
///
/// Name-matches over compound subjects are canonicalized at construction:
/// `=(s*t)` becomes `=s*=t`, so a canonical NameMatch node always carries a
/// single name and matching is purely structural.
class Pattern {
 public:
  enum class Kind { binding, name_match, compound };

  static Pattern binding(Name n);
  static Pattern name_match(Term subject);  // expands compound subjects
  static Pattern compound(Pattern left, Pattern right);

  Kind kind() const;
  const Name& binding_name() const;  // requires kind() == binding
  const Name& match_name() const;    // requires kind() == name_match
  Pattern left() const;              // requires kind() == compound
  Pattern right() const;             // requires kind() == compound

  friend bool operator==(const Pattern& a, const Pattern& b) { return equal(a, b); }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !equal(a, b); }

 private:
  struct Node;
  explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Pattern& a, const Pattern& b);
  std::shared_ptr<const Node> node_;
};

struct PatternNames {
  std::set<Name> binding;  // names bound by the pattern
  std::set<Name> matched;  // names tested by name-matches
};

/// Binding and matched name sets; defined even for ill-formed patterns.
PatternNames pattern_names(const Pattern& p);

/// True iff all binding names in `p` are pairwise distinct.
bool is_well_formed(const Pattern& p);

/// The minimal matching degree admitting `p`: a lone binding name needs no
/// matching capability; binding names and name-matches without compounds
/// need name-matching; anything with a compound needs intensionality.
MatchDegree pattern_class(const Pattern& p);

std::string pretty(const Pattern& p);

}  // namespace intens
