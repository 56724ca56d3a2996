#include "intens/subst.hpp"

#include <stdexcept>

namespace intens {

Substitution::Substitution(std::initializer_list<std::pair<Name, Term>> bindings) {
  for (const auto& [from, to] : bindings) set(from, to);
}

void Substitution::set(Name from, Term to) {
  map_.insert_or_assign(std::move(from), std::move(to));
}

const Term* Substitution::find(const Name& n) const {
  auto it = map_.find(n);
  return it == map_.end() ? nullptr : &it->second;
}

std::set<Name> Substitution::domain() const {
  std::set<Name> out;
  for (const auto& [from, to] : map_) out.insert(from);
  return out;
}

std::set<Name> Substitution::range_names() const {
  std::set<Name> out;
  for (const auto& [from, to] : map_) {
    auto names = free_names(to);
    out.insert(names.begin(), names.end());
  }
  return out;
}

bool Substitution::names_only() const {
  for (const auto& [from, to] : map_) {
    if (!to.is_leaf()) return false;
  }
  return true;
}

Substitution Substitution::disjoint_union(const Substitution& a, const Substitution& b) {
  Substitution out = a;
  for (const auto& [from, to] : b) {
    if (out.contains(from)) {
      throw std::invalid_argument("substitution domains overlap on '" + from.str() + "'");
    }
    out.set(from, to);
  }
  return out;
}

Term apply(const Substitution& s, const Term& t) {
  if (t.is_leaf()) {
    if (const Term* image = s.find(t.name())) return *image;
    return t;
  }
  return Term::compound(apply(s, t.left()), apply(s, t.right()));
}

Pattern apply(const Substitution& s, const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::binding: {
      const Name& x = p.binding_name();
      if (s.contains(x) || s.range_names().contains(x)) {
        throw std::invalid_argument("substitution would capture binding name '" +
                                    x.str() + "'");
      }
      return p;
    }
    case Pattern::Kind::name_match:
      // name_match re-canonicalizes when the image is a compound.
      return Pattern::name_match(apply(s, Term::leaf(p.match_name())));
    case Pattern::Kind::compound:
      return Pattern::compound(apply(s, p.left()), apply(s, p.right()));
  }
  throw std::logic_error("unreachable");
}

std::string pretty(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [from, to] : s) {
    if (!first) out += ", ";
    first = false;
    out += pretty(to);
    out += '/';
    out += from.str();
  }
  out += '}';
  return out;
}

}  // namespace intens
