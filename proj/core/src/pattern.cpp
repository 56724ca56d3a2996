#include "intens/pattern.hpp"

#include <optional>
#include <stdexcept>

namespace intens {

struct Pattern::Node {
  Kind kind;
  std::optional<Name> name;  // binding or name-match subject
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Pattern Pattern::binding(Name n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::binding;
  node->name = std::move(n);
  return Pattern(std::move(node));
}

Pattern Pattern::name_match(Term subject) {
  if (subject.is_compound()) {
    return compound(name_match(subject.left()), name_match(subject.right()));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::name_match;
  node->name = subject.name();
  return Pattern(std::move(node));
}

Pattern Pattern::compound(Pattern l, Pattern r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::compound;
  node->left = std::move(l.node_);
  node->right = std::move(r.node_);
  return Pattern(std::move(node));
}

Pattern::Kind Pattern::kind() const { return node_->kind; }

const Name& Pattern::binding_name() const {
  if (kind() != Kind::binding) throw std::logic_error("Pattern::binding_name");
  return *node_->name;
}

const Name& Pattern::match_name() const {
  if (kind() != Kind::name_match) throw std::logic_error("Pattern::match_name");
  return *node_->name;
}

Pattern Pattern::left() const {
  if (kind() != Kind::compound) throw std::logic_error("Pattern::left");
  return Pattern(node_->left);
}

Pattern Pattern::right() const {
  if (kind() != Kind::compound) throw std::logic_error("Pattern::right");
  return Pattern(node_->right);
}

bool Pattern::equal(const Pattern& a, const Pattern& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::binding: return a.binding_name() == b.binding_name();
    case Kind::name_match: return a.match_name() == b.match_name();
    case Kind::compound:
      return equal(a.left(), b.left()) && equal(a.right(), b.right());
  }
  return false;
}

static void collect(const Pattern& p, PatternNames& out) {
  switch (p.kind()) {
    case Pattern::Kind::binding:
      out.binding.insert(p.binding_name());
      break;
    case Pattern::Kind::name_match:
      out.matched.insert(p.match_name());
      break;
    case Pattern::Kind::compound:
      collect(p.left(), out);
      collect(p.right(), out);
      break;
  }
}

PatternNames pattern_names(const Pattern& p) {
  PatternNames out;
  collect(p, out);
  return out;
}

static bool distinct_bindings(const Pattern& p, std::set<Name>& seen) {
  switch (p.kind()) {
    case Pattern::Kind::binding:
      return seen.insert(p.binding_name()).second;
    case Pattern::Kind::name_match:
      return true;
    case Pattern::Kind::compound:
      return distinct_bindings(p.left(), seen) && distinct_bindings(p.right(), seen);
  }
  return true;
}

bool is_well_formed(const Pattern& p) {
  std::set<Name> seen;
  return distinct_bindings(p, seen);
}

MatchDegree pattern_class(const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::binding: return MatchDegree::no_matching;
    case Pattern::Kind::name_match: return MatchDegree::name_matching;
    case Pattern::Kind::compound: return MatchDegree::intensional;
  }
  return MatchDegree::intensional;
}

static void print_pattern(const Pattern& p, bool parenthesize, std::string& out) {
  switch (p.kind()) {
    case Pattern::Kind::binding:
      out += p.binding_name().str();
      return;
    case Pattern::Kind::name_match:
      out += '=';
      out += p.match_name().str();
      return;
    case Pattern::Kind::compound:
      if (parenthesize) out += '(';
      print_pattern(p.left(), false, out);
      out += '*';
      print_pattern(p.right(), true, out);
      if (parenthesize) out += ')';
      return;
  }
}

std::string pretty(const Pattern& p) {
  std::string out;
  print_pattern(p, false, out);
  return out;
}

}  // namespace intens
