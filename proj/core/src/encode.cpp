#include "intens/encode.hpp"

#include <functional>
#include <set>

#include "intens/conform.hpp"

namespace intens {

namespace {

struct FreshNames {
  std::set<Name> avoid;
  int next = 0;
  int next_tag = 0;

  explicit FreshNames(const Process& p) : avoid(all_names(p)) {}

  Name take() {
    for (;;) {
      Name candidate = reserved_fresh(next++);
      if (avoid.insert(candidate).second) return candidate;
    }
  }

  // Traversal-position tag for the tag_ack mutant; deliberately free in the
  // result, which is exactly what breaks compositionality.
  Name take_tag() { return reserved_ack_tag(next_tag++); }
};

void require_source(const Process& p, const Language& src, const char* encoder,
                    bool feature_ok, const char* feature_msg) {
  if (!feature_ok) {
    throw std::invalid_argument(std::string(encoder) + ": " + feature_msg +
                                " (source is " + code(src) + ")");
  }
  auto violations = conformance_violations(p, src);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string(encoder) +
                                ": source does not conform to " + code(src) + ":\n" +
                                describe(violations));
  }
}

using ChildFn = std::function<Process(int)>;

Process homomorphic(const Process& p, const ChildFn& child) {
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      return p;
    case Process::Kind::restriction:
      return Process::restriction(p.restricted_name(), child(0));
    case Process::Kind::par: {
      // Children in order; the fresh-name counter must see the left side
      // first, and argument evaluation order would not guarantee that.
      Process left = child(0);
      Process right = child(1);
      return Process::par(std::move(left), std::move(right));
    }
    case Process::Kind::cond: {
      Process then_branch = child(0);
      Process else_branch = child(1);
      return Process::cond(p.cond_lhs(), p.cond_rhs(), std::move(then_branch),
                           std::move(else_branch));
    }
    case Process::Kind::repl:
      return Process::repl(child(0));
    default:
      throw std::logic_error("homomorphic: prefix form");
  }
}

// --- synchronism ------------------------------------------------------------

Process ack_output(const Name& x, Medium medium) {
  std::optional<Term> chan;
  if (medium == Medium::channel) chan = Term::leaf(x);
  return Process::output(std::move(chan), {Term::leaf(x)}, std::nullopt);
}

Process ack_input(const Name& x, Medium medium, Process cont) {
  std::optional<Term> chan;
  if (medium == Medium::channel) chan = Term::leaf(x);
  return Process::input(std::move(chan), {Pattern::name_match(Term::leaf(x))},
                        std::move(cont));
}

// Self-contained diverging loop on a private name; inert toward every
// translated prefix (single-name payload, private channel).
Process divergence_gadget(FreshNames& fresh, Medium medium) {
  const Name y = fresh.take();
  Process emit = ack_output(y, medium);
  Process loop = Process::repl(ack_input(y, medium, emit));
  return Process::restriction(y, Process::par(std::move(loop), std::move(emit)));
}

Process synch_clause(const Process& p, const Language& src, SynchMutation m,
                     FreshNames& fresh, const ChildFn& child) {
  switch (p.kind()) {
    case Process::Kind::ok:
      return m == SynchMutation::drop_ok ? Process::nil() : p;
    case Process::Kind::output: {
      const Name x = fresh.take();
      std::vector<Term> args = p.args();
      args[0] = Term::compound(Term::leaf(x), args[0]);
      Process main_out = Process::output(p.channel(), std::move(args), std::nullopt);
      Process cont = p.continuation() ? child(0) : Process::nil();
      Process ack = ack_input(x, src.medium, std::move(cont));
      if (m == SynchMutation::tag_ack) {
        // Widened to receive the tagged acknowledgment; the tag is dropped.
        std::optional<Term> chan;
        if (src.medium == Medium::channel) chan = Term::leaf(x);
        Process inner = ack.input_continuation();
        ack = Process::input(
            std::move(chan),
            {Pattern::compound(Pattern::name_match(Term::leaf(x)),
                               Pattern::binding(fresh.take()))},
            std::move(inner));
      }
      Process body = Process::par(std::move(main_out), std::move(ack));
      if (m == SynchMutation::loop_ack) {
        body = Process::par(std::move(body), divergence_gadget(fresh, src.medium));
      }
      return Process::restriction(x, std::move(body));
    }
    case Process::Kind::input: {
      const Name x = fresh.take();
      std::vector<Pattern> pats = p.patterns();
      pats[0] = Pattern::compound(Pattern::binding(x), pats[0]);
      Process cont = child(0);
      if (m == SynchMutation::tag_ack) {
        std::optional<Term> chan;
        if (src.medium == Medium::channel) chan = Term::leaf(x);
        Process tagged_ack = Process::output(
            std::move(chan),
            {Term::compound(Term::leaf(x), Term::leaf(fresh.take_tag()))},
            std::nullopt);
        cont = Process::par(std::move(tagged_ack), std::move(cont));
      } else if (m != SynchMutation::drop_ack) {
        cont = Process::par(ack_output(x, src.medium), std::move(cont));
      }
      return Process::input(p.channel(), std::move(pats), std::move(cont));
    }
    default:
      return homomorphic(p, child);
  }
}

// --- arity ------------------------------------------------------------------

Process arity_clause(const Process& p, const ChildFn& child) {
  switch (p.kind()) {
    case Process::Kind::output: {
      Term spine = Term::leaf(reserved_tag());
      for (const Term& t : p.args()) spine = Term::compound(spine, t);
      std::optional<Process> cont;
      if (p.continuation()) cont = child(0);
      return Process::output(p.channel(), {std::move(spine)}, std::move(cont));
    }
    case Process::Kind::input: {
      Pattern spine = Pattern::name_match(Term::leaf(reserved_tag()));
      for (const Pattern& q : p.patterns()) spine = Pattern::compound(spine, q);
      return Process::input(p.channel(), {std::move(spine)}, child(0));
    }
    default:
      return homomorphic(p, child);
  }
}

// --- medium -----------------------------------------------------------------

Process medium_clause(const Process& p, const ChildFn& child) {
  switch (p.kind()) {
    case Process::Kind::output: {
      std::vector<Term> args = p.args();
      args[0] = Term::compound(*p.channel(), args[0]);
      std::optional<Process> cont;
      if (p.continuation()) cont = child(0);
      return Process::output(std::nullopt, std::move(args), std::move(cont));
    }
    case Process::Kind::input: {
      std::vector<Pattern> pats = p.patterns();
      pats[0] = Pattern::compound(Pattern::name_match(*p.channel()), pats[0]);
      return Process::input(std::nullopt, std::move(pats), child(0));
    }
    default:
      return homomorphic(p, child);
  }
}

// --- embedding --------------------------------------------------------------

Process embed_clause(const Process& p, const Language& from, const Language& to,
                     const ChildFn& child) {
  const bool add_cont = from.synchronism == Synchronism::asynchronous &&
                        to.synchronism == Synchronism::synchronous;
  const bool add_chan =
      from.medium == Medium::dataspace && to.medium == Medium::channel;
  switch (p.kind()) {
    case Process::Kind::output: {
      std::optional<Term> chan = p.channel();
      if (add_chan) chan = Term::leaf(reserved_channel(static_cast<int>(p.args().size())));
      std::optional<Process> cont;
      if (p.continuation()) cont = child(0);
      if (add_cont && !cont) cont = Process::nil();
      return Process::output(std::move(chan), p.args(), std::move(cont));
    }
    case Process::Kind::input: {
      std::optional<Term> chan = p.channel();
      if (add_chan) {
        chan = Term::leaf(reserved_channel(static_cast<int>(p.patterns().size())));
      }
      return Process::input(std::move(chan), p.patterns(), child(0));
    }
    default:
      return homomorphic(p, child);
  }
}

// --- shared recursion -------------------------------------------------------

using Clause = std::function<Process(const Process&, const ChildFn&)>;

Process translate(const Process& p, const Clause& clause) {
  std::vector<Process> children = process_children(p);
  ChildFn child = [&](int i) { return translate(children[i], clause); };
  return clause(p, child);
}

}  // namespace

std::vector<Process> process_children(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      return {};
    case Process::Kind::output:
      return p.continuation() ? std::vector<Process>{*p.continuation()}
                              : std::vector<Process>{};
    case Process::Kind::input:
      return {p.input_continuation()};
    case Process::Kind::restriction:
    case Process::Kind::repl:
      return {p.body()};
    case Process::Kind::par:
      return {p.left(), p.right()};
    case Process::Kind::cond:
      return {p.then_branch(), p.else_branch()};
  }
  return {};
}

Process rebuild_with_children(const Process& p, std::span<const Process> children) {
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::ok:
      return p;
    case Process::Kind::output:
      return Process::output(p.channel(), p.args(),
                             p.continuation()
                                 ? std::optional<Process>(children[0])
                                 : std::nullopt);
    case Process::Kind::input:
      return Process::input(p.channel(), p.patterns(), children[0]);
    case Process::Kind::restriction:
      return Process::restriction(p.restricted_name(), children[0]);
    case Process::Kind::repl:
      return Process::repl(children[0]);
    case Process::Kind::par:
      return Process::par(children[0], children[1]);
    case Process::Kind::cond:
      return Process::cond(p.cond_lhs(), p.cond_rhs(), children[0], children[1]);
  }
  throw std::logic_error("unreachable");
}

Process encode_synch(const Process& p, const Language& src, SynchMutation m) {
  require_source(p, src, "encode_synch",
                 src.synchronism == Synchronism::synchronous,
                 "source language must be synchronous");
  FreshNames fresh(p);
  return translate(p, [&](const Process& q, const ChildFn& child) {
    return synch_clause(q, src, m, fresh, child);
  });
}

Process encode_arity(const Process& p, const Language& src) {
  require_source(p, src, "encode_arity", src.arity == DataArity::polyadic,
                 "source language must be polyadic");
  if (all_names(p).contains(reserved_tag())) {
    throw std::invalid_argument("encode_arity: source mentions the reserved name '" +
                                reserved_tag().str() + "'");
  }
  return translate(p, [](const Process& q, const ChildFn& child) {
    return arity_clause(q, child);
  });
}

Process encode_medium(const Process& p, const Language& src) {
  require_source(p, src, "encode_medium", src.medium == Medium::channel,
                 "source language must be channel-based");
  return translate(p, [](const Process& q, const ChildFn& child) {
    return medium_clause(q, child);
  });
}

Process embed(const Process& p, const Language& from, const Language& to) {
  if (!leq(from, to)) {
    throw std::invalid_argument("embed: " + code(from) + " is not below " + code(to));
  }
  require_source(p, from, "embed", true, "");
  Process result = translate(p, [&](const Process& q, const ChildFn& child) {
    return embed_clause(q, from, to, child);
  });
  auto violations = conformance_violations(result, to);
  if (!violations.empty()) {
    throw std::logic_error("embed: result does not conform to " + code(to) + ":\n" +
                           describe(violations));
  }
  return result;
}

std::string describe(const EncodingStep& step) {
  const char* name = "";
  switch (step.kind) {
    case EncodingStep::Kind::synch: name = "synch"; break;
    case EncodingStep::Kind::arity: name = "arity"; break;
    case EncodingStep::Kind::medium: name = "medium"; break;
    case EncodingStep::Kind::embed: name = "embed"; break;
  }
  return std::string(name) + " " + code(step.source) + " -> " + code(step.target);
}

std::vector<EncodingStep> plan_encoding(const Language& from, const Language& to) {
  if (leq(from, to)) {
    return {EncodingStep{EncodingStep::Kind::embed, from, to, 1, 1}};
  }
  if (to.matching != MatchDegree::intensional) {
    throw UnreachableTarget(
        "no encoding of " + code(from) + " into " + code(to) +
        ": there is no valid encoding of an intensional language into a "
        "non-intensional one, and the source is not below the target");
  }
  std::vector<EncodingStep> steps;
  Language cur = from;
  if (cur.matching != MatchDegree::intensional) {
    Language raised = cur;
    raised.matching = MatchDegree::intensional;
    steps.push_back({EncodingStep::Kind::embed, cur, raised, 1, 1});
    cur = raised;
  }
  if (cur.synchronism == Synchronism::synchronous &&
      to.synchronism == Synchronism::asynchronous) {
    Language next = cur;
    next.synchronism = Synchronism::asynchronous;
    steps.push_back({EncodingStep::Kind::synch, cur, next, 1, 2});
    cur = next;
  }
  if (cur.arity == DataArity::polyadic && to.arity == DataArity::monadic) {
    Language next = cur;
    next.arity = DataArity::monadic;
    steps.push_back({EncodingStep::Kind::arity, cur, next, 1, 1});
    cur = next;
  }
  if (cur.medium == Medium::channel && to.medium == Medium::dataspace) {
    Language next = cur;
    next.medium = Medium::dataspace;
    steps.push_back({EncodingStep::Kind::medium, cur, next, 1, 1});
    cur = next;
  }
  if (!(cur == to)) {
    steps.push_back({EncodingStep::Kind::embed, cur, to, 1, 1});
  }
  return steps;
}

Process apply_step(const EncodingStep& step, const Process& p, SynchMutation m) {
  switch (step.kind) {
    case EncodingStep::Kind::synch: return encode_synch(p, step.source, m);
    case EncodingStep::Kind::arity: return encode_arity(p, step.source);
    case EncodingStep::Kind::medium: return encode_medium(p, step.source);
    case EncodingStep::Kind::embed: return embed(p, step.source, step.target);
  }
  throw std::logic_error("unreachable");
}

Process encode_to(const Process& p, const Language& from, const Language& to,
                  SynchMutation m) {
  const auto steps = plan_encoding(from, to);
  Process cur = p;
  for (const EncodingStep& step : steps) {
    cur = apply_step(step, cur, m);
    auto violations = conformance_violations(cur, step.target);
    if (!violations.empty()) {
      throw std::logic_error("encode_to: stage '" + describe(step) +
                             "' broke conformance:\n" + describe(violations));
    }
  }
  return cur;
}

int step_factor(std::span<const EncodingStep> steps) {
  int factor = 1;
  for (const EncodingStep& s : steps) factor *= s.target_steps;
  return factor;
}

Process apply_step_one_level(const EncodingStep& step, const Process& p,
                             std::span<const Process> encoded_children,
                             SynchMutation m) {
  ChildFn child = [&](int i) { return encoded_children[i]; };
  switch (step.kind) {
    case EncodingStep::Kind::synch: {
      FreshNames fresh(p);
      for (const Process& c : encoded_children) fresh.avoid.merge(all_names(c));
      return synch_clause(p, step.source, m, fresh, child);
    }
    case EncodingStep::Kind::arity:
      return arity_clause(p, child);
    case EncodingStep::Kind::medium:
      return medium_clause(p, child);
    case EncodingStep::Kind::embed:
      return embed_clause(p, step.source, step.target, child);
  }
  throw std::logic_error("unreachable");
}

}  // namespace intens
