#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "intens/pattern.hpp"
#include "intens/term.hpp"

namespace intens {

/// Finite map from names to terms. In the non-intensional languages the
/// range is names only; `names_only()` lets callers enforce that.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Name, Term>> bindings);

  void set(Name from, Term to);
  const Term* find(const Name& n) const;
  bool contains(const Name& n) const { return find(n) != nullptr; }

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  std::set<Name> domain() const;
  /// All names occurring in image terms.
  std::set<Name> range_names() const;
  bool names_only() const;

  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.map_ == b.map_;
  }

  /// Union with disjoint-domain requirement; throws std::invalid_argument on
  /// overlap (overlap means ill-formed input, not a failed match).
  static Substitution disjoint_union(const Substitution& a, const Substitution& b);

 private:
  std::map<Name, Term> map_;
};

Term apply(const Substitution& s, const Term& t);

/// Applies `s` to name-match subjects only; binding names must be untouched.
/// Precondition (caller renames first): binding names of `p` are neither in
/// dom(s) nor among the names of its images. Violations throw.
Pattern apply(const Substitution& s, const Pattern& p);

std::string pretty(const Substitution& s);

}  // namespace intens
