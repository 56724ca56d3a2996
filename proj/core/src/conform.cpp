#include "intens/conform.hpp"

namespace intens {

namespace {

const char* degree_name(MatchDegree d) {
  switch (d) {
    case MatchDegree::no_matching: return "NO";
    case MatchDegree::name_matching: return "NM";
    case MatchDegree::intensional: return "I";
  }
  return "?";
}

struct Checker {
  const Language& lang;
  const ConformOptions& opts;
  std::vector<Violation> out;

  void flag(const std::string& path, std::string message) {
    out.push_back({path, std::move(message)});
  }

  void check_channel(const std::optional<Term>& chan, const std::string& path,
                     const char* what) {
    if (lang.medium == Medium::channel) {
      if (!chan) {
        flag(path, std::string(what) + " lacks a channel (medium is channel-based)");
      } else if (lang.matching != MatchDegree::intensional && !chan->is_leaf()) {
        flag(path, std::string(what) + " channel '" + pretty(*chan) +
                       "' is a compound term (needs matching degree I)");
      }
    } else if (chan) {
      flag(path, std::string(what) + " has a channel (medium is dataspace)");
    }
  }

  void check_arity(std::size_t n, const std::string& path, const char* what) {
    if (lang.arity == DataArity::monadic && n != 1) {
      flag(path, std::string(what) + " has arity " + std::to_string(n) +
                     " (language is monadic)");
    }
  }

  void check_cond_term(const Term& t, const std::string& path) {
    if (opts.names_only_cond && lang.matching != MatchDegree::intensional &&
        !t.is_leaf()) {
      flag(path, "conditional operand '" + pretty(t) +
                     "' is a compound term (needs matching degree I)");
    }
  }

  void visit(const Process& p, const std::string& path) {
    switch (p.kind()) {
      case Process::Kind::nil:
      case Process::Kind::ok:
        return;
      case Process::Kind::output: {
        check_channel(p.channel(), path, "output");
        check_arity(p.args().size(), path, "output");
        if (lang.matching != MatchDegree::intensional) {
          for (const Term& t : p.args()) {
            if (!t.is_leaf()) {
              flag(path, "output term '" + pretty(t) +
                             "' is a compound (needs matching degree I)");
            }
          }
        }
        if (lang.synchronism == Synchronism::synchronous) {
          if (!p.continuation()) {
            flag(path, "output lacks a continuation (language is synchronous)");
          } else {
            visit(*p.continuation(), path + "/cont");
          }
        } else if (p.continuation()) {
          flag(path, "output has a continuation (language is asynchronous)");
          visit(*p.continuation(), path + "/cont");
        }
        return;
      }
      case Process::Kind::input: {
        check_channel(p.channel(), path, "input");
        check_arity(p.patterns().size(), path, "input");
        for (std::size_t i = 0; i < p.patterns().size(); ++i) {
          const MatchDegree cls = pattern_class(p.patterns()[i]);
          if (static_cast<int>(cls) > static_cast<int>(lang.matching)) {
            flag(path + "/pattern[" + std::to_string(i) + "]",
                 "pattern '" + pretty(p.patterns()[i]) + "' needs matching degree " +
                     degree_name(cls) + " but language allows " +
                     degree_name(lang.matching));
          }
        }
        visit(p.input_continuation(), path + "/cont");
        return;
      }
      case Process::Kind::restriction:
        visit(p.body(), path + "/new");
        return;
      case Process::Kind::par:
        visit(p.left(), path + "/par[0]");
        visit(p.right(), path + "/par[1]");
        return;
      case Process::Kind::cond:
        check_cond_term(p.cond_lhs(), path);
        check_cond_term(p.cond_rhs(), path);
        visit(p.then_branch(), path + "/then");
        visit(p.else_branch(), path + "/else");
        return;
      case Process::Kind::repl:
        visit(p.body(), path + "/repl");
        return;
    }
  }
};

}  // namespace

std::vector<Violation> conformance_violations(const Process& p, const Language& l,
                                              const ConformOptions& opts) {
  Checker checker{l, opts, {}};
  checker.visit(p, "");
  return checker.out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += '\n';
    out += v.path.empty() ? "/" : v.path;
    out += ": ";
    out += v.message;
  }
  return out;
}

}  // namespace intens
