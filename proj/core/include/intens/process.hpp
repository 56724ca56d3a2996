#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "intens/subst.hpp"

namespace intens {

/// Process syntax shared by all 24 languages. Optional slots (output
/// continuation, channel subject) cover the language variations; the
/// conformance checker decides which combinations a given language admits.
/// Immutable; copies share structure.
class Process {
 public:
  enum class Kind { nil, ok, output, input, restriction, par, cond, repl };

  static Process nil();
  static Process ok();
  /// `args` nonempty. `continuation` present only in synchronous languages.
  static Process output(std::optional<Term> channel, std::vector<Term> args,
                        std::optional<Process> continuation);
  /// `patterns` nonempty; binding names must be pairwise distinct across the
  /// whole sequence (throws std::invalid_argument otherwise).
  static Process input(std::optional<Term> channel, std::vector<Pattern> patterns,
                       Process continuation);
  static Process restriction(Name name, Process body);
  static Process par(Process left, Process right);
  static Process cond(Term lhs, Term rhs, Process then_branch, Process else_branch);
  static Process repl(Process body);

  Kind kind() const;

  // Output / Input accessors.
  const std::optional<Term>& channel() const;
  const std::vector<Term>& args() const;                  // output
  const std::optional<Process>& continuation() const;     // output
  const std::vector<Pattern>& patterns() const;           // input
  const Process& input_continuation() const;              // input

  const Name& restricted_name() const;  // restriction
  const Process& body() const;          // restriction / repl
  const Process& left() const;          // par
  const Process& right() const;         // par
  const Term& cond_lhs() const;         // cond
  const Term& cond_rhs() const;         // cond
  const Process& then_branch() const;   // cond
  const Process& else_branch() const;   // cond

  /// Structural equality (bound names compared literally; see alpha_eq).
  friend bool operator==(const Process& a, const Process& b) { return equal(a, b); }
  friend bool operator!=(const Process& a, const Process& b) { return !equal(a, b); }

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Process& a, const Process& b);
  std::shared_ptr<const Node> node_;
};

std::set<Name> free_names(const Process& p);

/// Every name occurring in `p`, free or bound.
std::set<Name> all_names(const Process& p);

/// Capture-avoiding substitution. Bound names that would capture an image
/// name are renamed to fresh `#f<n>` names, with the counter chosen
/// deterministically from the names already present.
Process apply_subst(const Substitution& s, const Process& p);

/// Equality up to consistent renaming of bound names.
bool alpha_eq(const Process& a, const Process& b);

}  // namespace intens
