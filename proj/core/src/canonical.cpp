#include "intens/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "intens/pretty.hpp"

namespace intens {

namespace {

// ---------------------------------------------------------------------------
// Phase 1: rename every binder to a unique scratch name, so that later
// flattening and scope extrusion never needs a side condition.

Term rename_term(const Term& t, const std::map<Name, Name>& env) {
  if (t.is_leaf()) {
    auto it = env.find(t.name());
    return it == env.end() ? t : Term::leaf(it->second);
  }
  return Term::compound(rename_term(t.left(), env), rename_term(t.right(), env));
}

Pattern rename_pattern(const Pattern& p, const std::map<Name, Name>& subjects,
                       const std::map<Name, Name>& binders) {
  switch (p.kind()) {
    case Pattern::Kind::binding: {
      auto it = binders.find(p.binding_name());
      return it == binders.end() ? p : Pattern::binding(it->second);
    }
    case Pattern::Kind::name_match: {
      auto it = subjects.find(p.match_name());
      return it == subjects.end() ? p : Pattern::name_match(Term::leaf(it->second));
    }
    case Pattern::Kind::compound:
      return Pattern::compound(rename_pattern(p.left(), subjects, binders),
                               rename_pattern(p.right(), subjects, binders));
  }
  throw std::logic_error("unreachable");
}

// Binding names in left-to-right pattern order; canonical numbering must
// follow position, not name, to be alpha-invariant.
void bindings_in_order(const Pattern& p, std::vector<Name>& out) {
  switch (p.kind()) {
    case Pattern::Kind::binding:
      out.push_back(p.binding_name());
      return;
    case Pattern::Kind::name_match:
      return;
    case Pattern::Kind::compound:
      bindings_in_order(p.left(), out);
      bindings_in_order(p.right(), out);
      return;
  }
}

struct Uniquifier {
  int next = 0;

  Process run(const Process& p, const std::map<Name, Name>& env) {
    switch (p.kind()) {
      case Process::Kind::nil:
      case Process::Kind::ok:
        return p;
      case Process::Kind::output: {
        std::optional<Term> chan;
        if (p.channel()) chan = rename_term(*p.channel(), env);
        std::vector<Term> args;
        for (const Term& t : p.args()) args.push_back(rename_term(t, env));
        std::optional<Process> cont;
        if (p.continuation()) cont = run(*p.continuation(), env);
        return Process::output(std::move(chan), std::move(args), std::move(cont));
      }
      case Process::Kind::input: {
        std::optional<Term> chan;
        if (p.channel()) chan = rename_term(*p.channel(), env);
        std::map<Name, Name> binder_map;
        std::map<Name, Name> inner = env;
        for (const Pattern& pat : p.patterns()) {
          std::vector<Name> ordered;
          bindings_in_order(pat, ordered);
          for (const Name& b : ordered) {
            const Name temp = canonical_temp(next++);
            binder_map.emplace(b, temp);
            inner.insert_or_assign(b, temp);
          }
        }
        std::vector<Pattern> pats;
        for (const Pattern& pat : p.patterns()) {
          pats.push_back(rename_pattern(pat, env, binder_map));
        }
        return Process::input(std::move(chan), std::move(pats),
                              run(p.input_continuation(), inner));
      }
      case Process::Kind::restriction: {
        const Name temp = canonical_temp(next++);
        std::map<Name, Name> inner = env;
        inner.insert_or_assign(p.restricted_name(), temp);
        return Process::restriction(temp, run(p.body(), inner));
      }
      case Process::Kind::par: {
        Process left = run(p.left(), env);  // temp numbering follows traversal
        Process right = run(p.right(), env);
        return Process::par(std::move(left), std::move(right));
      }
      case Process::Kind::cond: {
        Process then_branch = run(p.then_branch(), env);
        Process else_branch = run(p.else_branch(), env);
        return Process::cond(rename_term(p.cond_lhs(), env),
                             rename_term(p.cond_rhs(), env), std::move(then_branch),
                             std::move(else_branch));
      }
      case Process::Kind::repl:
        return Process::repl(run(p.body(), env));
    }
    throw std::logic_error("unreachable");
  }
};

// ---------------------------------------------------------------------------
// Phase 2: level-by-level normalization. A level is a maximal parallel
// composition; restrictions met while flattening are pulled to the level top
// (safe after phase 1), nils dropped, and conditionals resolved except under
// an input prefix, where a later substitution could change the comparison.

struct Level {
  std::vector<Name> restricted;
  std::vector<Process> threads;
};

Level canonical_level(const Process& fragment, bool under_input, int n_base,
                      int b_base);

Process rebuild(const Level& level) {
  Process body = Process::nil();
  if (!level.threads.empty()) {
    body = level.threads.front();
    for (std::size_t i = 1; i < level.threads.size(); ++i) {
      body = Process::par(body, level.threads[i]);
    }
  }
  for (auto it = level.restricted.rbegin(); it != level.restricted.rend(); ++it) {
    body = Process::restriction(*it, body);
  }
  return body;
}

int binding_count(const Process& input_proc) {
  int n = 0;
  for (const Pattern& pat : input_proc.patterns()) {
    n += static_cast<int>(pattern_names(pat).binding.size());
  }
  return n;
}

// Canonicalizes the inside of one thread; the thread's head stays put.
Process canon_thread(const Process& q, bool under_input, int n_child_base, int b_base) {
  switch (q.kind()) {
    case Process::Kind::ok:
      return q;
    case Process::Kind::output: {
      if (!q.continuation()) return q;
      Level sub = canonical_level(*q.continuation(), under_input, n_child_base, b_base);
      return Process::output(q.channel(), q.args(), rebuild(sub));
    }
    case Process::Kind::input: {
      // Rename binding names canonically, in pattern order, then normalize
      // the continuation under the input flag.
      std::map<Name, Name> binder_map;
      int next_b = b_base;
      std::vector<Pattern> pats;
      for (const Pattern& pat : q.patterns()) {
        std::vector<Name> ordered;
        bindings_in_order(pat, ordered);
        for (const Name& b : ordered) {
          binder_map.emplace(b, canonical_binding(next_b++));
        }
        pats.push_back(rename_pattern(pat, {}, binder_map));
      }
      Substitution rename;
      for (const auto& [from, to] : binder_map) rename.set(from, Term::leaf(to));
      Process cont = apply_subst(rename, q.input_continuation());
      Level sub = canonical_level(cont, /*under_input=*/true, n_child_base, next_b);
      return Process::input(q.channel(), std::move(pats), rebuild(sub));
    }
    case Process::Kind::repl: {
      Level sub = canonical_level(q.body(), under_input, n_child_base, b_base);
      return Process::repl(rebuild(sub));
    }
    case Process::Kind::cond: {
      // Only reachable under an input prefix; both branches normalize there.
      Level then_sub =
          canonical_level(q.then_branch(), under_input, n_child_base, b_base);
      Level else_sub =
          canonical_level(q.else_branch(), under_input, n_child_base, b_base);
      return Process::cond(q.cond_lhs(), q.cond_rhs(), rebuild(then_sub),
                           rebuild(else_sub));
    }
    default:
      throw std::logic_error("canon_thread: not a thread form");
  }
}

Substitution renaming_subst(const std::vector<Name>& from, const std::vector<Name>& to) {
  Substitution s;
  for (std::size_t i = 0; i < from.size(); ++i) s.set(from[i], Term::leaf(to[i]));
  return s;
}

// Binder occurrences of this level's scratch names cannot appear inside the
// threads (phase 1 made binders unique), so a plain free-name rewrite is
// enough and capture cannot happen.
std::vector<Process> rename_threads(const std::vector<Process>& threads,
                                    const Substitution& s) {
  std::vector<Process> out;
  out.reserve(threads.size());
  for (const Process& t : threads) out.push_back(apply_subst(s, t));
  return out;
}

Level canonical_level(const Process& fragment, bool under_input, int n_base,
                      int b_base) {
  // Flatten this level: collect restrictions and thread heads.
  std::vector<Name> temps;
  std::vector<Process> raw;
  std::vector<Process> todo{fragment};
  while (!todo.empty()) {
    Process q = todo.back();
    todo.pop_back();
    switch (q.kind()) {
      case Process::Kind::nil:
        break;
      case Process::Kind::par:
        todo.push_back(q.right());
        todo.push_back(q.left());
        break;
      case Process::Kind::restriction:
        temps.push_back(q.restricted_name());
        todo.push_back(q.body());
        break;
      case Process::Kind::cond:
        if (!under_input) {
          todo.push_back(q.cond_lhs() == q.cond_rhs() ? q.then_branch()
                                                      : q.else_branch());
        } else {
          raw.push_back(q);
        }
        break;
      default:
        raw.push_back(q);
        break;
    }
  }

  // Keep only restrictions whose name still occurs: (new a)P = P otherwise.
  std::set<Name> occurring;
  for (const Process& q : raw) occurring.merge(free_names(q));
  std::vector<Name> used;
  for (const Name& t : temps) {
    if (occurring.contains(t)) used.push_back(t);
  }
  const int k = static_cast<int>(used.size());

  // Canonicalize thread interiors; inner restriction numbering starts above
  // this level's slots so no name is ever shadowed along a scope path.
  std::vector<Process> threads;
  threads.reserve(raw.size());
  for (const Process& q : raw) {
    threads.push_back(canon_thread(q, under_input, n_base + k, b_base));
  }

  // Assign #n<n_base>.. to the used restrictions: pick the permutation whose
  // sorted pretty-printout is lexicographically least. Restricted sets are
  // small; beyond 8 fall back to first-occurrence order within the
  // placeholder-sorted printout.
  std::vector<Name> canonical_names;
  for (int i = 0; i < k; ++i) canonical_names.push_back(canonical_restricted(n_base + i));

  std::vector<Process> best_threads;
  if (k == 0) {
    best_threads = std::move(threads);
    std::sort(best_threads.begin(), best_threads.end(),
              [](const Process& a, const Process& b) { return pretty(a) < pretty(b); });
  } else if (k <= 8) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best_key;
    bool first = true;
    do {
      std::vector<Name> target(k, Name("#t0"));
      for (int i = 0; i < k; ++i) target[i] = canonical_names[perm[i]];
      auto candidate = rename_threads(threads, renaming_subst(used, target));
      std::vector<std::string> prints;
      prints.reserve(candidate.size());
      for (const Process& t : candidate) prints.push_back(pretty(t));
      std::vector<std::size_t> order(candidate.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return prints[a] < prints[b]; });
      std::string joined;
      for (std::size_t i : order) {
        joined += prints[i];
        joined += '\x01';
      }
      if (first || joined < best_key) {
        first = false;
        best_key = std::move(joined);
        best_threads.clear();
        for (std::size_t i : order) best_threads.push_back(candidate[i]);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    // Deterministic fallback: order by first occurrence within the sorted
    // placeholder printout.
    Substitution blank = renaming_subst(used, std::vector<Name>(k, Name("#t0")));
    auto masked = rename_threads(threads, blank);
    std::vector<std::size_t> order(threads.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::string> prints;
    for (const Process& t : masked) prints.push_back(pretty(t));
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return prints[a] < prints[b]; });
    std::map<Name, Name> assign;
    int next_index = 0;
    for (std::size_t i : order) {
      for (const Name& n : free_names(threads[i])) {
        if (std::find(used.begin(), used.end(), n) != used.end() &&
            !assign.contains(n)) {
          assign.emplace(n, canonical_names[next_index++]);
        }
      }
    }
    Substitution s;
    for (const auto& [from, to] : assign) s.set(from, Term::leaf(to));
    best_threads = rename_threads(threads, s);
    std::sort(best_threads.begin(), best_threads.end(),
              [](const Process& a, const Process& b) { return pretty(a) < pretty(b); });
  }

  return Level{std::move(canonical_names), std::move(best_threads)};
}

}  // namespace

Process to_process(const CanonicalForm& c) {
  return rebuild(Level{c.restricted, c.threads});
}

CanonicalForm canonicalize(const Process& p) {
  Uniquifier uniq;
  Process unique = uniq.run(p, {});
  Level top = canonical_level(unique, /*under_input=*/false, 0, 0);
  CanonicalForm form{std::move(top.restricted), std::move(top.threads), ""};
  form.key = pretty(to_process(form));
  return form;
}

bool struct_eq(const Process& a, const Process& b) {
  return canonicalize(a).key == canonicalize(b).key;
}

}  // namespace intens
