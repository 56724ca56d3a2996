#include "intens/term.hpp"

#include <optional>
#include <stdexcept>

namespace intens {

struct Term::Node {
  std::optional<Name> leaf;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Term Term::leaf(Name n) {
  auto node = std::make_shared<Node>();
  node->leaf = std::move(n);
  return Term(std::move(node));
}

Term Term::compound(Term l, Term r) {
  auto node = std::make_shared<Node>();
  node->left = std::move(l.node_);
  node->right = std::move(r.node_);
  return Term(std::move(node));
}

bool Term::is_leaf() const { return node_->leaf.has_value(); }

const Name& Term::name() const {
  if (!is_leaf()) throw std::logic_error("Term::name on compound");
  return *node_->leaf;
}

Term Term::left() const {
  if (is_leaf()) throw std::logic_error("Term::left on leaf");
  return Term(node_->left);
}

Term Term::right() const {
  if (is_leaf()) throw std::logic_error("Term::right on leaf");
  return Term(node_->right);
}

bool Term::equal(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.name() == b.name();
  return equal(a.left(), b.left()) && equal(a.right(), b.right());
}

std::size_t Term::hash() const {
  if (is_leaf()) return NameHash{}(name());
  std::size_t h = left().hash();
  h ^= right().hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

static void collect_names(const Term& t, std::set<Name>& out) {
  if (t.is_leaf()) {
    out.insert(t.name());
  } else {
    collect_names(t.left(), out);
    collect_names(t.right(), out);
  }
}

std::set<Name> free_names(const Term& t) {
  std::set<Name> out;
  collect_names(t, out);
  return out;
}

int term_size(const Term& t) {
  if (t.is_leaf()) return 1;
  return term_size(t.left()) + term_size(t.right());
}

static void print_term(const Term& t, bool parenthesize, std::string& out) {
  if (t.is_leaf()) {
    out += t.name().str();
    return;
  }
  if (parenthesize) out += '(';
  print_term(t.left(), /*parenthesize=*/false, out);
  out += '*';
  print_term(t.right(), /*parenthesize=*/true, out);
  if (parenthesize) out += ')';
}

std::string pretty(const Term& t) {
  std::string out;
  print_term(t, false, out);
  return out;
}

}  // namespace intens
