#include "intens/process.hpp"

#include <map>
#include <stdexcept>

namespace intens {

struct Process::Node {
  Kind kind;
  std::optional<Term> channel;
  std::vector<Term> args;          // output
  std::vector<Pattern> patterns;   // input
  std::optional<Name> name;        // restriction
  std::optional<Term> lhs, rhs;    // cond
  std::optional<Process> cont;     // output continuation
  std::vector<Process> children;   // input cont / bodies / par halves / branches
};

Process Process::nil() {
  static const Process p = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::nil;
    return Process(std::move(n));
  }();
  return p;
}

Process Process::ok() {
  static const Process p = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ok;
    return Process(std::move(n));
  }();
  return p;
}

Process Process::output(std::optional<Term> channel, std::vector<Term> args,
                        std::optional<Process> continuation) {
  if (args.empty()) throw std::invalid_argument("output needs at least one term");
  auto n = std::make_shared<Node>();
  n->kind = Kind::output;
  n->channel = std::move(channel);
  n->args = std::move(args);
  n->cont = std::move(continuation);
  return Process(std::move(n));
}

Process Process::input(std::optional<Term> channel, std::vector<Pattern> patterns,
                       Process continuation) {
  if (patterns.empty()) throw std::invalid_argument("input needs at least one pattern");
  std::set<Name> seen;
  for (const Pattern& p : patterns) {
    for (const Name& b : pattern_names(p).binding) {
      if (!seen.insert(b).second) {
        throw std::invalid_argument("input binds '" + b.str() + "' more than once");
      }
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::input;
  n->channel = std::move(channel);
  n->patterns = std::move(patterns);
  n->children.push_back(std::move(continuation));
  return Process(std::move(n));
}

Process Process::restriction(Name name, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::restriction;
  n->name = std::move(name);
  n->children.push_back(std::move(body));
  return Process(std::move(n));
}

Process Process::par(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::par;
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return Process(std::move(n));
}

Process Process::cond(Term lhs, Term rhs, Process then_branch, Process else_branch) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cond;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->children.push_back(std::move(then_branch));
  n->children.push_back(std::move(else_branch));
  return Process(std::move(n));
}

Process Process::repl(Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::repl;
  n->children.push_back(std::move(body));
  return Process(std::move(n));
}

Process::Kind Process::kind() const { return node_->kind; }

static void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

const std::optional<Term>& Process::channel() const {
  require(kind() == Kind::output || kind() == Kind::input, "Process::channel");
  return node_->channel;
}

const std::vector<Term>& Process::args() const {
  require(kind() == Kind::output, "Process::args");
  return node_->args;
}

const std::optional<Process>& Process::continuation() const {
  require(kind() == Kind::output, "Process::continuation");
  return node_->cont;
}

const std::vector<Pattern>& Process::patterns() const {
  require(kind() == Kind::input, "Process::patterns");
  return node_->patterns;
}

const Process& Process::input_continuation() const {
  require(kind() == Kind::input, "Process::input_continuation");
  return node_->children[0];
}

const Name& Process::restricted_name() const {
  require(kind() == Kind::restriction, "Process::restricted_name");
  return *node_->name;
}

const Process& Process::body() const {
  require(kind() == Kind::restriction || kind() == Kind::repl, "Process::body");
  return node_->children[0];
}

const Process& Process::left() const {
  require(kind() == Kind::par, "Process::left");
  return node_->children[0];
}

const Process& Process::right() const {
  require(kind() == Kind::par, "Process::right");
  return node_->children[1];
}

const Term& Process::cond_lhs() const {
  require(kind() == Kind::cond, "Process::cond_lhs");
  return *node_->lhs;
}

const Term& Process::cond_rhs() const {
  require(kind() == Kind::cond, "Process::cond_rhs");
  return *node_->rhs;
}

const Process& Process::then_branch() const {
  require(kind() == Kind::cond, "Process::then_branch");
  return node_->children[0];
}

const Process& Process::else_branch() const {
  require(kind() == Kind::cond, "Process::else_branch");
  return node_->children[1];
}

bool Process::equal(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.channel.has_value() != nb.channel.has_value()) return false;
  if (na.channel && *na.channel != *nb.channel) return false;
  if (na.args != nb.args) return false;
  if (na.patterns != nb.patterns) return false;
  if (na.name != nb.name) return false;
  if (na.lhs.has_value() != nb.lhs.has_value()) return false;
  if (na.lhs && (*na.lhs != *nb.lhs || *na.rhs != *nb.rhs)) return false;
  if (na.cont.has_value() != nb.cont.has_value()) return false;
  if (na.cont && !equal(*na.cont, *nb.cont)) return false;
  if (na.children.size() != nb.children.size()) return false;
  for (std::size_t i = 0; i < na.children.size(); ++i) {
    if (!equal(na.children[i], nb.children[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Free names

std::set<Name> free_names(const Process& p) {
  std::set<Name> out;
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      break;
    case Process::Kind::output: {
      if (p.channel()) out = free_names(*p.channel());
      for (const Term& t : p.args()) out.merge(free_names(t));
      if (p.continuation()) out.merge(free_names(*p.continuation()));
      break;
    }
    case Process::Kind::input: {
      if (p.channel()) out = free_names(*p.channel());
      std::set<Name> bound;
      for (const Pattern& pat : p.patterns()) {
        auto names = pattern_names(pat);
        out.merge(names.matched);
        bound.merge(names.binding);
      }
      for (const Name& n : free_names(p.input_continuation())) {
        if (!bound.contains(n)) out.insert(n);
      }
      break;
    }
    case Process::Kind::restriction: {
      out = free_names(p.body());
      out.erase(p.restricted_name());
      break;
    }
    case Process::Kind::par: {
      out = free_names(p.left());
      out.merge(free_names(p.right()));
      break;
    }
    case Process::Kind::cond: {
      out = free_names(p.cond_lhs());
      out.merge(free_names(p.cond_rhs()));
      out.merge(free_names(p.then_branch()));
      out.merge(free_names(p.else_branch()));
      break;
    }
    case Process::Kind::repl:
      out = free_names(p.body());
      break;
  }
  return out;
}

std::set<Name> all_names(const Process& p) {
  std::set<Name> out;
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      break;
    case Process::Kind::output: {
      if (p.channel()) out = free_names(*p.channel());
      for (const Term& t : p.args()) out.merge(free_names(t));
      if (p.continuation()) out.merge(all_names(*p.continuation()));
      break;
    }
    case Process::Kind::input: {
      if (p.channel()) out = free_names(*p.channel());
      for (const Pattern& pat : p.patterns()) {
        auto names = pattern_names(pat);
        out.merge(names.matched);
        out.merge(names.binding);
      }
      out.merge(all_names(p.input_continuation()));
      break;
    }
    case Process::Kind::restriction: {
      out = all_names(p.body());
      out.insert(p.restricted_name());
      break;
    }
    case Process::Kind::par: {
      out = all_names(p.left());
      out.merge(all_names(p.right()));
      break;
    }
    case Process::Kind::cond: {
      out = free_names(p.cond_lhs());
      out.merge(free_names(p.cond_rhs()));
      out.merge(all_names(p.then_branch()));
      out.merge(all_names(p.else_branch()));
      break;
    }
    case Process::Kind::repl:
      out = all_names(p.body());
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Capture-avoiding substitution

namespace {

struct FreshCtx {
  std::set<Name> avoid;
  int next = 0;

  Name fresh() {
    for (;;) {
      Name candidate = reserved_fresh(next++);
      if (avoid.insert(candidate).second) return candidate;
    }
  }
};

Substitution restrict_to(const Substitution& s, const std::set<Name>& keep) {
  Substitution out;
  for (const auto& [from, to] : s) {
    if (keep.contains(from)) out.set(from, to);
  }
  return out;
}

Pattern rename_bindings(const Pattern& p, const std::map<Name, Name>& renaming) {
  switch (p.kind()) {
    case Pattern::Kind::binding: {
      auto it = renaming.find(p.binding_name());
      return it == renaming.end() ? p : Pattern::binding(it->second);
    }
    case Pattern::Kind::name_match:
      return p;
    case Pattern::Kind::compound:
      return Pattern::compound(rename_bindings(p.left(), renaming),
                               rename_bindings(p.right(), renaming));
  }
  throw std::logic_error("unreachable");
}

Process subst_rec(const Substitution& s, const Process& p, FreshCtx& ctx) {
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      return p;
    case Process::Kind::output: {
      std::optional<Term> chan;
      if (p.channel()) chan = apply(s, *p.channel());
      std::vector<Term> args;
      args.reserve(p.args().size());
      for (const Term& t : p.args()) args.push_back(apply(s, t));
      std::optional<Process> cont;
      if (p.continuation()) cont = subst_rec(s, *p.continuation(), ctx);
      return Process::output(std::move(chan), std::move(args), std::move(cont));
    }
    case Process::Kind::input: {
      // Free occurrences: the channel, every name-match subject (binding
      // names do not scope over sibling subjects), and names free in the
      // continuation that are not bound here.
      const Substitution relevant = restrict_to(s, free_names(p));
      if (relevant.empty()) return p;

      std::set<Name> bound;
      for (const Pattern& pat : p.patterns()) bound.merge(pattern_names(pat).binding);

      // Rename binders that collide with the substitution, both captures and
      // domain collisions: afterwards `relevant` applies uniformly to the
      // patterns and the (renamed) continuation.
      std::map<Name, Name> renaming;
      const std::set<Name> dom = relevant.domain();
      const std::set<Name> images = relevant.range_names();
      for (const Name& b : bound) {
        if (dom.contains(b) || images.contains(b)) renaming.emplace(b, ctx.fresh());
      }

      Process cont = p.input_continuation();
      if (!renaming.empty()) {
        Substitution rename_subst;
        for (const auto& [from, to] : renaming) rename_subst.set(from, Term::leaf(to));
        cont = subst_rec(rename_subst, cont, ctx);
      }

      std::optional<Term> chan;
      if (p.channel()) chan = apply(relevant, *p.channel());
      std::vector<Pattern> pats;
      pats.reserve(p.patterns().size());
      for (const Pattern& pat : p.patterns()) {
        pats.push_back(apply(relevant, rename_bindings(pat, renaming)));
      }
      return Process::input(std::move(chan), std::move(pats),
                            subst_rec(relevant, cont, ctx));
    }
    case Process::Kind::restriction: {
      const Name& bound = p.restricted_name();
      Substitution inner;
      for (const auto& [from, to] : s) {
        if (!(from == bound)) inner.set(from, to);
      }
      inner = restrict_to(inner, free_names(p.body()));
      if (inner.empty()) return p;
      if (inner.range_names().contains(bound)) {
        const Name renamed = ctx.fresh();
        Substitution rename_subst;
        rename_subst.set(bound, Term::leaf(renamed));
        Process body = subst_rec(rename_subst, p.body(), ctx);
        return Process::restriction(renamed, subst_rec(inner, body, ctx));
      }
      return Process::restriction(bound, subst_rec(inner, p.body(), ctx));
    }
    case Process::Kind::par: {
      Process left = subst_rec(s, p.left(), ctx);  // fresh counter in order
      Process right = subst_rec(s, p.right(), ctx);
      return Process::par(std::move(left), std::move(right));
    }
    case Process::Kind::cond: {
      Process then_branch = subst_rec(s, p.then_branch(), ctx);
      Process else_branch = subst_rec(s, p.else_branch(), ctx);
      return Process::cond(apply(s, p.cond_lhs()), apply(s, p.cond_rhs()),
                           std::move(then_branch), std::move(else_branch));
    }
    case Process::Kind::repl:
      return Process::repl(subst_rec(s, p.body(), ctx));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Process apply_subst(const Substitution& s, const Process& p) {
  if (s.empty()) return p;
  FreshCtx ctx;
  ctx.avoid = all_names(p);
  ctx.avoid.merge(s.domain());
  ctx.avoid.merge(s.range_names());
  return subst_rec(s, p, ctx);
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

using BoundEnv = std::map<Name, int>;

bool alpha_name(const Name& a, const Name& b, const BoundEnv& ea, const BoundEnv& eb) {
  auto ia = ea.find(a);
  auto ib = eb.find(b);
  if (ia != ea.end() || ib != eb.end()) {
    return ia != ea.end() && ib != eb.end() && ia->second == ib->second;
  }
  return a == b;
}

bool alpha_term(const Term& a, const Term& b, const BoundEnv& ea, const BoundEnv& eb) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return alpha_name(a.name(), b.name(), ea, eb);
  return alpha_term(a.left(), b.left(), ea, eb) &&
         alpha_term(a.right(), b.right(), ea, eb);
}

// Compares pattern structure. Match subjects are free and resolve in the
// outer environments; binding positions only extend the continuation
// environments (a binding does not capture a sibling name-match).
bool alpha_pattern(const Pattern& a, const Pattern& b, const BoundEnv& ea,
                   const BoundEnv& eb, BoundEnv& ea_cont, BoundEnv& eb_cont,
                   int& counter) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Pattern::Kind::binding: {
      const int idx = counter++;
      ea_cont[a.binding_name()] = idx;
      eb_cont[b.binding_name()] = idx;
      return true;
    }
    case Pattern::Kind::name_match:
      return alpha_name(a.match_name(), b.match_name(), ea, eb);
    case Pattern::Kind::compound:
      return alpha_pattern(a.left(), b.left(), ea, eb, ea_cont, eb_cont, counter) &&
             alpha_pattern(a.right(), b.right(), ea, eb, ea_cont, eb_cont, counter);
  }
  return false;
}

bool alpha_rec(const Process& a, const Process& b, BoundEnv ea, BoundEnv eb,
               int counter) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      return true;
    case Process::Kind::output: {
      if (a.channel().has_value() != b.channel().has_value()) return false;
      if (a.channel() && !alpha_term(*a.channel(), *b.channel(), ea, eb)) return false;
      if (a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!alpha_term(a.args()[i], b.args()[i], ea, eb)) return false;
      }
      if (a.continuation().has_value() != b.continuation().has_value()) return false;
      if (!a.continuation()) return true;
      return alpha_rec(*a.continuation(), *b.continuation(), std::move(ea),
                       std::move(eb), counter);
    }
    case Process::Kind::input: {
      if (a.channel().has_value() != b.channel().has_value()) return false;
      if (a.channel() && !alpha_term(*a.channel(), *b.channel(), ea, eb)) return false;
      if (a.patterns().size() != b.patterns().size()) return false;
      BoundEnv ea_cont = ea;
      BoundEnv eb_cont = eb;
      for (std::size_t i = 0; i < a.patterns().size(); ++i) {
        if (!alpha_pattern(a.patterns()[i], b.patterns()[i], ea, eb, ea_cont, eb_cont,
                           counter)) {
          return false;
        }
      }
      return alpha_rec(a.input_continuation(), b.input_continuation(),
                       std::move(ea_cont), std::move(eb_cont), counter);
    }
    case Process::Kind::restriction: {
      const int idx = counter++;
      ea[a.restricted_name()] = idx;
      eb[b.restricted_name()] = idx;
      return alpha_rec(a.body(), b.body(), std::move(ea), std::move(eb), counter);
    }
    case Process::Kind::par:
      return alpha_rec(a.left(), b.left(), ea, eb, counter) &&
             alpha_rec(a.right(), b.right(), std::move(ea), std::move(eb), counter);
    case Process::Kind::cond:
      return alpha_term(a.cond_lhs(), b.cond_lhs(), ea, eb) &&
             alpha_term(a.cond_rhs(), b.cond_rhs(), ea, eb) &&
             alpha_rec(a.then_branch(), b.then_branch(), ea, eb, counter) &&
             alpha_rec(a.else_branch(), b.else_branch(), std::move(ea), std::move(eb),
                       counter);
    case Process::Kind::repl:
      return alpha_rec(a.body(), b.body(), std::move(ea), std::move(eb), counter);
  }
  return false;
}

}  // namespace

bool alpha_eq(const Process& a, const Process& b) {
  return alpha_rec(a, b, {}, {}, 0);
}

}  // namespace intens
