#include "intens/match.hpp"

#include <stdexcept>

namespace intens {

static std::optional<Substitution> match_rec(const Term& t, const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::binding: {
      Substitution s;
      s.set(p.binding_name(), t);
      return s;
    }
    case Pattern::Kind::name_match:
      if (t.is_leaf() && t.name() == p.match_name()) return Substitution{};
      return std::nullopt;
    case Pattern::Kind::compound: {
      if (t.is_leaf()) return std::nullopt;
      auto l = match_rec(t.left(), p.left());
      if (!l) return std::nullopt;
      auto r = match_rec(t.right(), p.right());
      if (!r) return std::nullopt;
      // Domains are disjoint because the pattern is well-formed.
      return Substitution::disjoint_union(*l, *r);
    }
  }
  return std::nullopt;
}

std::optional<Substitution> match_one(const Term& t, const Pattern& p) {
  if (!is_well_formed(p)) {
    throw std::invalid_argument("match_one: ill-formed pattern " + pretty(p));
  }
  return match_rec(t, p);
}

std::optional<Substitution> poly_match(std::span<const Term> ts,
                                       std::span<const Pattern> ps) {
  std::set<Name> seen;
  for (const Pattern& p : ps) {
    if (!is_well_formed(p)) {
      throw std::invalid_argument("poly_match: ill-formed pattern " + pretty(p));
    }
    for (const Name& b : pattern_names(p).binding) {
      if (!seen.insert(b).second) {
        throw std::invalid_argument("poly_match: binding name '" + b.str() +
                                    "' repeats across the pattern sequence");
      }
    }
  }
  if (ts.size() != ps.size()) return std::nullopt;
  Substitution out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto component = match_rec(ts[i], ps[i]);
    if (!component) return std::nullopt;
    out = Substitution::disjoint_union(out, *component);
  }
  return out;
}

}  // namespace intens
