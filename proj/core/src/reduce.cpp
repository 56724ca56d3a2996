#include "intens/reduce.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "intens/match.hpp"
#include "intens/pretty.hpp"
#include "intens/process.hpp"

namespace intens {

namespace {

// One participant in redex enumeration: either a thread of the form itself
// or a component of the single unfolding of a replicated thread.
struct Entry {
  Process proc;
  int thread_index;
  bool from_unfold;
  int component;  // -1 for plain threads
};

struct Fragment {
  std::vector<Name> restricted;  // renamed apart from everything else
  std::vector<Process> components;
};

struct Expansion {
  std::vector<Entry> entries;
  // fragment per thread index; empty components for non-replicated threads.
  std::vector<Fragment> fragments;
};

// Splits a canonical replication body `new a...(t0 | t1 | ...)` back into
// its level structure.
void peel(const Process& p, std::vector<Name>& restricted,
          std::vector<Process>& components) {
  if (p.kind() == Process::Kind::restriction) {
    restricted.push_back(p.restricted_name());
    peel(p.body(), restricted, components);
    return;
  }
  if (p.kind() == Process::Kind::par) {
    peel(p.left(), restricted, components);
    peel(p.right(), restricted, components);
    return;
  }
  if (p.kind() != Process::Kind::nil) components.push_back(p);
}

// Deterministic expansion: unfold each replicated thread once, renaming its
// restrictions apart so components from different unfoldings cannot clash.
Expansion expand(const CanonicalForm& c) {
  Expansion out;
  out.fragments.resize(c.threads.size());

  std::set<Name> avoid = free_names(to_process(c));
  for (const Process& t : c.threads) avoid.merge(all_names(t));
  avoid.insert(c.restricted.begin(), c.restricted.end());
  int next_fresh = 0;
  auto fresh = [&] {
    for (;;) {
      Name candidate = reserved_fresh(next_fresh++);
      if (avoid.insert(candidate).second) return candidate;
    }
  };

  for (int i = 0; i < static_cast<int>(c.threads.size()); ++i) {
    const Process& t = c.threads[i];
    out.entries.push_back({t, i, false, -1});
    if (t.kind() != Process::Kind::repl) continue;

    std::vector<Name> inner;
    std::vector<Process> components;
    peel(t.body(), inner, components);

    Substitution rename;
    Fragment frag;
    for (const Name& n : inner) {
      Name renamed = fresh();
      rename.set(n, Term::leaf(renamed));
      frag.restricted.push_back(std::move(renamed));
    }
    for (int ci = 0; ci < static_cast<int>(components.size()); ++ci) {
      Process component =
          rename.empty() ? components[ci] : apply_subst(rename, components[ci]);
      out.entries.push_back({component, i, true, ci});
      frag.components.push_back(std::move(component));
    }
    out.fragments[i] = std::move(frag);
  }
  return out;
}

bool channels_agree(const Process& output, const Process& input) {
  const bool has_out = output.channel().has_value();
  const bool has_in = input.channel().has_value();
  if (has_out != has_in) return false;
  if (!has_out) return true;
  return *output.channel() == *input.channel();
}

std::vector<Redex> enumerate(const Expansion& ex) {
  std::vector<Redex> out;
  for (const Entry& o : ex.entries) {
    if (o.proc.kind() != Process::Kind::output) continue;
    for (const Entry& i : ex.entries) {
      if (i.proc.kind() != Process::Kind::input) continue;
      if (!channels_agree(o.proc, i.proc)) continue;
      auto subst = poly_match(o.proc.args(), i.proc.patterns());
      if (!subst) continue;
      Redex r;
      r.output_thread = o.thread_index;
      r.input_thread = i.thread_index;
      r.subst = std::move(*subst);
      r.output_from_unfold = o.from_unfold;
      r.output_component = o.component;
      r.input_from_unfold = i.from_unfold;
      r.input_component = i.component;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::vector<Redex> redexes(const CanonicalForm& c, const Language& lang) {
  (void)lang;  // channel agreement is presence-based; conformance upholds it
  return enumerate(expand(c));
}

CanonicalForm step(const CanonicalForm& c, const Redex& r, const Language& lang) {
  if (lang.matching != MatchDegree::intensional && !r.subst.names_only()) {
    // Outputs outside the intensional languages carry names only, so a
    // term-valued substitution here means the redex belongs elsewhere.
    throw std::invalid_argument(
        "step: names-to-terms substitution in a non-intensional language");
  }
  Expansion ex = expand(c);
  const std::vector<Redex> valid = enumerate(ex);
  if (std::find(valid.begin(), valid.end(), r) == valid.end()) {
    throw std::invalid_argument("step: stale redex");
  }

  std::vector<Process> parts;
  std::vector<Name> binders(c.restricted);

  auto consumed_output = [&](int thread, bool from_unfold, int component) {
    return thread == r.output_thread && from_unfold == r.output_from_unfold &&
           component == r.output_component;
  };
  auto consumed_input = [&](int thread, bool from_unfold, int component) {
    return thread == r.input_thread && from_unfold == r.input_from_unfold &&
           component == r.input_component;
  };

  // Residue of a consumed output: its continuation, when synchronous.
  auto fire_output = [&](const Process& output) {
    if (output.continuation()) parts.push_back(*output.continuation());
  };
  auto fire_input = [&](const Process& input) {
    parts.push_back(apply_subst(r.subst, input.input_continuation()));
  };

  const std::set<int> involved_unfolds = [&] {
    std::set<int> s;
    if (r.output_from_unfold) s.insert(r.output_thread);
    if (r.input_from_unfold) s.insert(r.input_thread);
    return s;
  }();

  for (int i = 0; i < static_cast<int>(c.threads.size()); ++i) {
    const Process& t = c.threads[i];
    if (consumed_output(i, false, -1)) {
      fire_output(t);
      continue;
    }
    if (consumed_input(i, false, -1)) {
      fire_input(t);
      continue;
    }
    parts.push_back(t);  // replicated threads always stay

    if (involved_unfolds.contains(i)) {
      const Fragment& frag = ex.fragments[i];
      binders.insert(binders.end(), frag.restricted.begin(), frag.restricted.end());
      for (int ci = 0; ci < static_cast<int>(frag.components.size()); ++ci) {
        if (consumed_output(i, true, ci)) {
          fire_output(frag.components[ci]);
        } else if (consumed_input(i, true, ci)) {
          fire_input(frag.components[ci]);
        } else {
          parts.push_back(frag.components[ci]);
        }
      }
    }
  }

  Process body = Process::nil();
  if (!parts.empty()) {
    body = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) body = Process::par(body, parts[i]);
  }
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    body = Process::restriction(*it, body);
  }
  return canonicalize(body);
}

int ReductionGraph::node_id(const std::string& key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

namespace {

bool node_has_success(const CanonicalForm& c) {
  for (const Process& t : c.threads) {
    if (t.kind() == Process::Kind::ok) return true;
  }
  return false;
}

bool has_directed_cycle(const std::vector<std::vector<int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<int> indegree(n, 0);
  for (const auto& succ : edges) {
    for (int v : succ) ++indegree[v];
  }
  std::deque<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++visited;
    for (int w : edges[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return visited != n;
}

}  // namespace

ReductionGraph explore(const Process& p, const Language& lang, const Limits& limits) {
  if (limits.depth < 1 || limits.nodes < 1) {
    throw std::invalid_argument("explore: limits must be >= 1");
  }
  ReductionGraph g;
  CanonicalForm root = canonicalize(p);
  g.index.emplace(root.key, 0);
  g.nodes.push_back(std::move(root));
  g.edges.emplace_back();
  g.depth.push_back(0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();

    const std::vector<Redex> rs = redexes(g.nodes[id], lang);
    if (g.depth[id] >= limits.depth) {
      if (!rs.empty()) {
        g.truncated = true;
        g.depth_truncated = true;
      }
      continue;
    }
    std::set<int> succ;
    for (const Redex& r : rs) {
      CanonicalForm next = step(g.nodes[id], r, lang);
      auto it = g.index.find(next.key);
      int next_id;
      if (it != g.index.end()) {
        next_id = it->second;
      } else {
        if (static_cast<int>(g.nodes.size()) >= limits.nodes) {
          g.truncated = true;
          continue;
        }
        next_id = static_cast<int>(g.nodes.size());
        g.index.emplace(next.key, next_id);
        g.nodes.push_back(std::move(next));
        g.edges.emplace_back();
        g.depth.push_back(g.depth[id] + 1);
        queue.push_back(next_id);
      }
      succ.insert(next_id);
    }
    g.edges[id].assign(succ.begin(), succ.end());
  }

  for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
    if (node_has_success(g.nodes[i])) g.success_nodes.push_back(i);
  }
  g.cycle_found = has_directed_cycle(g.edges);
  return g;
}

SuccessVerdict succeeds(const Process& p, const Language& lang, const Limits& limits) {
  return explore(p, lang, limits).has_success() ? SuccessVerdict::yes
                                                : SuccessVerdict::not_within_bounds;
}

std::string to_edge_list(const ReductionGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += std::to_string(i);
    out += ": ";
    out += g.nodes[i].key;
    out += '\n';
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (int j : g.edges[i]) {
      out += "edge: ";
      out += std::to_string(i);
      out += " -> ";
      out += std::to_string(j);
      out += '\n';
    }
  }
  return out;
}

std::string to_dot(const ReductionGraph& g) {
  auto escaped = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out = "digraph reductions {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + escaped(g.nodes[i].key) + "\"";
    if (std::find(g.success_nodes.begin(), g.success_nodes.end(),
                  static_cast<int>(i)) != g.success_nodes.end()) {
      out += ", shape=doublecircle";
    }
    out += "];\n";
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (int j : g.edges[i]) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace intens
