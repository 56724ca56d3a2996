#include "support/oracle.hpp"

#include <set>

namespace intens::testing {

std::optional<Term> instantiate(const Pattern& p, const Substitution& s) {
  switch (p.kind()) {
    case Pattern::Kind::binding: {
      const Term* image = s.find(p.binding_name());
      if (!image) return std::nullopt;
      return *image;
    }
    case Pattern::Kind::name_match:
      return Term::leaf(p.match_name());
    case Pattern::Kind::compound: {
      auto l = instantiate(p.left(), s);
      auto r = instantiate(p.right(), s);
      if (!l || !r) return std::nullopt;
      return Term::compound(*l, *r);
    }
  }
  return std::nullopt;
}

namespace {

void subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  if (t.is_compound()) {
    subterms(t.left(), out);
    subterms(t.right(), out);
  }
}

}  // namespace

std::optional<Substitution> oracle_match(const Term& t, const Pattern& p) {
  std::vector<Name> binders;
  for (const Name& b : pattern_names(p).binding) binders.push_back(b);

  std::vector<Term> candidates;
  subterms(t, candidates);

  // Odometer over assignments binders -> subterms of t.
  std::vector<std::size_t> pick(binders.size(), 0);
  for (;;) {
    Substitution s;
    for (std::size_t i = 0; i < binders.size(); ++i) {
      s.set(binders[i], candidates[pick[i]]);
    }
    auto image = instantiate(p, s);
    if (image && *image == t) return s;

    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < candidates.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;  // odometer wrapped; also ends the 0-binder case
  }
  return std::nullopt;
}

std::vector<Term> all_terms(int max_depth, const std::vector<Name>& alphabet) {
  std::vector<Term> current;
  for (const Name& n : alphabet) current.push_back(Term::leaf(n));
  for (int d = 2; d <= max_depth; ++d) {
    const std::vector<Term> previous = current;
    for (const Term& l : previous) {
      for (const Term& r : previous) current.push_back(Term::compound(l, r));
    }
    // Deduplicate: compounds of shallower layers recur across rounds.
    std::vector<Term> unique;
    for (const Term& t : current) {
      bool seen = false;
      for (const Term& u : unique) {
        if (t == u) {
          seen = true;
          break;
        }
      }
      if (!seen) unique.push_back(t);
    }
    current = std::move(unique);
  }
  return current;
}

std::vector<Pattern> all_patterns(int max_depth, const std::vector<Name>& binders,
                                  const std::vector<Name>& matches) {
  std::vector<Pattern> current;
  for (const Name& b : binders) current.push_back(Pattern::binding(b));
  for (const Name& m : matches) current.push_back(Pattern::name_match(Term::leaf(m)));
  for (int d = 2; d <= max_depth; ++d) {
    const std::vector<Pattern> previous = current;
    for (const Pattern& l : previous) {
      for (const Pattern& r : previous) current.push_back(Pattern::compound(l, r));
    }
    std::vector<Pattern> unique;
    for (const Pattern& p : current) {
      bool seen = false;
      for (const Pattern& u : unique) {
        if (p == u) {
          seen = true;
          break;
        }
      }
      if (!seen) unique.push_back(p);
    }
    current = std::move(unique);
  }
  std::vector<Pattern> well_formed;
  for (const Pattern& p : current) {
    if (is_well_formed(p)) well_formed.push_back(p);
  }
  return well_formed;
}

}  // namespace intens::testing
