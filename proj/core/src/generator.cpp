#include "intens/generator.hpp"

#include <stdexcept>

namespace intens {

namespace {

const std::vector<std::string>& name_pool() {
  static const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
  return pool;
}

const std::vector<std::string>& binder_pool() {
  static const std::vector<std::string> pool{"x", "y", "z", "u", "v", "w"};
  return pool;
}

struct Gen {
  const Language& lang;
  std::mt19937_64& rng;
  const GenOptions& opts;

  int pick(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
  bool chance(int percent) { return pick(100) < percent; }

  Name free_name() { return Name(name_pool()[pick(static_cast<int>(name_pool().size()))]); }

  Term term(int depth) {
    if (lang.matching == MatchDegree::intensional && depth > 0 && chance(40)) {
      return Term::compound(term(depth - 1), term(depth - 1));
    }
    return Term::leaf(free_name());
  }

  Term channel_term() {
    if (lang.matching == MatchDegree::intensional && chance(15)) {
      return Term::compound(Term::leaf(free_name()), Term::leaf(free_name()));
    }
    return Term::leaf(free_name());
  }

  int arity() {
    if (lang.arity == DataArity::monadic) return 1;
    return 1 + pick(opts.max_arity);
  }

  Pattern pattern(int depth, std::vector<Name>& binders_taken) {
    switch (lang.matching) {
      case MatchDegree::no_matching:
        return Pattern::binding(fresh_binder(binders_taken));
      case MatchDegree::name_matching:
        if (chance(40)) return Pattern::name_match(Term::leaf(free_name()));
        return Pattern::binding(fresh_binder(binders_taken));
      case MatchDegree::intensional:
        if (depth > 0 && chance(45)) {
          Pattern l = pattern(depth - 1, binders_taken);
          Pattern r = pattern(depth - 1, binders_taken);
          return Pattern::compound(std::move(l), std::move(r));
        }
        if (chance(35)) return Pattern::name_match(term(depth));
        return Pattern::binding(fresh_binder(binders_taken));
    }
    throw std::logic_error("unreachable");
  }

  Name fresh_binder(std::vector<Name>& taken) {
    const auto& pool = binder_pool();
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::string base = pool[pick(static_cast<int>(pool.size()))];
      if (attempt >= static_cast<int>(pool.size())) {
        base += std::to_string(attempt);
      }
      Name candidate(base);
      bool used = false;
      for (const Name& t : taken) {
        if (t == candidate) {
          used = true;
          break;
        }
      }
      if (!used) {
        taken.push_back(candidate);
        return candidate;
      }
    }
    Name fallback("x" + std::to_string(static_cast<int>(taken.size())));
    taken.push_back(fallback);
    return fallback;
  }

  Process output(int depth) {
    std::optional<Term> chan;
    if (lang.medium == Medium::channel) chan = channel_term();
    std::vector<Term> args;
    const int n = arity();
    for (int i = 0; i < n; ++i) args.push_back(term(opts.max_term_depth));
    std::optional<Process> cont;
    if (lang.synchronism == Synchronism::synchronous) cont = process(depth - 1);
    return Process::output(std::move(chan), std::move(args), std::move(cont));
  }

  Process input(int depth) {
    std::optional<Term> chan;
    if (lang.medium == Medium::channel) chan = channel_term();
    std::vector<Pattern> pats;
    std::vector<Name> taken;
    const int n = arity();
    for (int i = 0; i < n; ++i) pats.push_back(pattern(opts.max_term_depth, taken));
    return Process::input(std::move(chan), std::move(pats), process(depth - 1));
  }

  Process process(int depth) {
    if (depth <= 0) {
      switch (pick(3)) {
        case 0: return Process::nil();
        case 1: return Process::ok();
        default:
          if (lang.synchronism == Synchronism::synchronous) return Process::ok();
          return output(0);
      }
    }
    switch (pick(10)) {
      case 0: return Process::nil();
      case 1: return Process::ok();
      case 2:
      case 3: return output(depth);
      case 4:
      case 5: return input(depth);
      case 6: return Process::par(process(depth - 1), process(depth - 1));
      case 7: return Process::restriction(free_name(), process(depth - 1));
      case 8: {
        Term lhs = lang.matching == MatchDegree::intensional ? term(1)
                                                             : Term::leaf(free_name());
        Term rhs = lang.matching == MatchDegree::intensional ? term(1)
                                                             : Term::leaf(free_name());
        return Process::cond(std::move(lhs), std::move(rhs), process(depth - 1),
                             chance(50) ? Process::nil() : process(depth - 1));
      }
      default: return Process::repl(process(depth - 1));
    }
  }
};

Term fold_names(int count) {
  Term t = Term::leaf(Name("a1"));
  for (int i = 2; i <= count; ++i) {
    t = Term::compound(t, Term::leaf(Name("a" + std::to_string(i))));
  }
  return t;
}

}  // namespace

Process random_process(const Language& lang, std::mt19937_64& rng,
                       const GenOptions& opts) {
  Gen gen{lang, rng, opts};
  return gen.process(opts.max_depth);
}

Process minimal_input() {
  return Process::input(std::nullopt, {Pattern::binding(Name("x"))},
                        Process::output(std::nullopt, {Term::leaf(Name("m"))},
                                        std::nullopt));
}

Process minimal_output() {
  return Process::output(std::nullopt, {Term::leaf(Name("a"))}, std::nullopt);
}

Process wide_output(int k) {
  if (k < 0) throw std::invalid_argument("wide_output: k must be >= 0");
  return Process::output(std::nullopt, {fold_names(k + 2)}, std::nullopt);
}

Process wide_matcher(int k) {
  if (k < 0) throw std::invalid_argument("wide_matcher: k must be >= 0");
  return Process::input(std::nullopt, {Pattern::name_match(fold_names(k + 2))},
                        Process::output(std::nullopt, {Term::leaf(Name("m"))},
                                        std::nullopt));
}

Process wide_matcher_swapped(int k, int i) {
  if (k < 0 || i < 1 || i > k + 2) {
    throw std::invalid_argument("wide_matcher_swapped: need 1 <= i <= k+2");
  }
  Pattern pat = Pattern::name_match(
      Term::leaf(i == 1 ? Name("m") : Name("a1")));
  for (int j = 2; j <= k + 2; ++j) {
    Pattern next = Pattern::name_match(Term::leaf(j == i ? Name("m") : Name("a" + std::to_string(j))));
    pat = Pattern::compound(std::move(pat), std::move(next));
  }
  return Process::input(std::nullopt, {std::move(pat)},
                        Process::output(std::nullopt,
                                        {Term::leaf(Name("a" + std::to_string(i)))},
                                        std::nullopt));
}

}  // namespace intens
