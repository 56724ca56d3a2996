#pragma once

#include <memory>
#include <set>
#include <string>

#include "intens/name.hpp"

namespace intens {

/// A communicable value: a name or a compound `s*t` (finite binary tree).
/// Immutable; copies share structure.
class Term {
 public:
  static Term leaf(Name n);
  static Term compound(Term left, Term right);

  bool is_leaf() const;
  bool is_compound() const { return !is_leaf(); }

  const Name& name() const;  // requires is_leaf()
  Term left() const;         // requires is_compound()
  Term right() const;        // requires is_compound()

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b) { return equal(a, b); }
  friend bool operator!=(const Term& a, const Term& b) { return !equal(a, b); }

  std::size_t hash() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Term& a, const Term& b);
  std::shared_ptr<const Node> node_;
};

std::set<Name> free_names(const Term& t);

/// Number of leaves in `t`.
int term_size(const Term& t);

/// `a*b*c` with minimal parentheses (compound is left-associative).
std::string pretty(const Term& t);

}  // namespace intens
