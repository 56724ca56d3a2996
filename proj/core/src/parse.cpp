#include "intens/parse.hpp"

#include <cctype>
#include <optional>

namespace intens {

ParseError::ParseError(std::string message, int line, int col)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " +
                         message),
      line_(line),
      col_(col) {}

ConformanceError::ConformanceError(std::vector<Violation> violations)
    : std::runtime_error("process does not conform to the requested language:\n" +
                         describe(violations)),
      violations_(std::move(violations)) {}

namespace {

enum class Tok {
  ident,    // also carries '#'-names; keyword check happens in the lexer
  kw_new,
  kw_if,
  kw_then,
  kw_else,
  kw_ok,
  zero,     // `0`
  bar,      // `|`
  lparen,
  rparen,
  langle,
  rangle,
  comma,
  dot,
  star,
  eq,
  bang,
  quote,
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      const int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::eof, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '#') {
        std::string word;
        word += advance();  // '#' is only valid at the start of a name
        while (pos_ < src_.size() && ident_char(src_[pos_])) word += advance();
        Tok kind = Tok::ident;
        if (word == "new") kind = Tok::kw_new;
        else if (word == "if") kind = Tok::kw_if;
        else if (word == "then") kind = Tok::kw_then;
        else if (word == "else") kind = Tok::kw_else;
        else if (word == "ok") kind = Tok::kw_ok;
        out.push_back({kind, std::move(word), line, col});
        continue;
      }
      advance();
      switch (c) {
        case '0': out.push_back({Tok::zero, "0", line, col}); break;
        case '|': out.push_back({Tok::bar, "|", line, col}); break;
        case '(': out.push_back({Tok::lparen, "(", line, col}); break;
        case ')': out.push_back({Tok::rparen, ")", line, col}); break;
        case '<': out.push_back({Tok::langle, "<", line, col}); break;
        case '>': out.push_back({Tok::rangle, ">", line, col}); break;
        case ',': out.push_back({Tok::comma, ",", line, col}); break;
        case '.': out.push_back({Tok::dot, ".", line, col}); break;
        case '*': out.push_back({Tok::star, "*", line, col}); break;
        case '=': out.push_back({Tok::eq, "=", line, col}); break;
        case '!': out.push_back({Tok::bang, "!", line, col}); break;
        case '\'': out.push_back({Tok::quote, "'", line, col}); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      advance();
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opts)
      : tokens_(Lexer(src).run()), opts_(opts) {}

  Process parse_process_all() {
    Process p = parse_parallel();
    expect(Tok::eof, "end of input");
    return p;
  }

  Term parse_term_all() {
    Term t = parse_term();
    expect(Tok::eof, "end of input");
    return t;
  }

  Pattern parse_pattern_all() {
    Pattern p = parse_pattern();
    expect(Tok::eof, "end of input");
    return p;
  }

 private:
  const Token& peek(int ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::eof) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'",
                       peek().line, peek().col);
    }
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().col);
  }

  Name take_name() {
    const Token& t = expect(Tok::ident, "a name");
    if (!opts_.allow_reserved && t.text[0] == '#') {
      throw ParseError("'" + t.text + "' is a reserved name ('#' prefix)", t.line,
                       t.col);
    }
    return Name(t.text);
  }

  // term := atom ('*' atom)*
  Term parse_term() {
    Term t = parse_term_atom();
    while (accept(Tok::star)) t = Term::compound(t, parse_term_atom());
    return t;
  }

  Term parse_term_atom() {
    if (accept(Tok::lparen)) {
      Term t = parse_term();
      expect(Tok::rparen, "')'");
      return t;
    }
    return Term::leaf(take_name());
  }

  // pattern := patom ('*' patom)*; patom := name | '=' term-atom | '(' pattern ')'
  Pattern parse_pattern() {
    Pattern p = parse_pattern_atom();
    while (accept(Tok::star)) p = Pattern::compound(p, parse_pattern_atom());
    return p;
  }

  Pattern parse_pattern_atom() {
    if (accept(Tok::eq)) return Pattern::name_match(parse_term_atom());
    if (accept(Tok::lparen)) {
      Pattern p = parse_pattern();
      expect(Tok::rparen, "')'");
      return p;
    }
    return Pattern::binding(take_name());
  }

  std::vector<Term> parse_term_list() {
    std::vector<Term> out;
    out.push_back(parse_term());
    while (accept(Tok::comma)) out.push_back(parse_term());
    return out;
  }

  std::vector<Pattern> parse_pattern_list() {
    std::vector<Pattern> out;
    out.push_back(parse_pattern());
    while (accept(Tok::comma)) out.push_back(parse_pattern());
    return out;
  }

  // Checked wrapper so duplicate binding names report a position.
  Process make_input(std::optional<Term> chan, std::vector<Pattern> pats, Process cont,
                     const Token& at) {
    std::set<Name> seen;
    for (const Pattern& p : pats) {
      if (!is_well_formed(p)) {
        throw ParseError("pattern '" + pretty(p) + "' repeats a binding name", at.line,
                         at.col);
      }
      for (const Name& b : pattern_names(p).binding) {
        if (!seen.insert(b).second) {
          throw ParseError("binding name '" + b.str() + "' repeats across the input",
                           at.line, at.col);
        }
      }
    }
    return Process::input(std::move(chan), std::move(pats), std::move(cont));
  }

  Process parse_parallel() {
    Process p = parse_prefix();
    while (accept(Tok::bar)) p = Process::par(p, parse_prefix());
    return p;
  }

  // Output tail after the channel (if any) has been read: `<t,...>[.P]`.
  Process parse_output_tail(std::optional<Term> chan) {
    expect(Tok::langle, "'<'");
    std::vector<Term> args = parse_term_list();
    expect(Tok::rangle, "'>'");
    std::optional<Process> cont;
    if (accept(Tok::dot)) cont = parse_prefix();
    return Process::output(std::move(chan), std::move(args), std::move(cont));
  }

  Process parse_prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::zero:
        next();
        return Process::nil();
      case Tok::kw_ok:
        next();
        return Process::ok();
      case Tok::bang:
        next();
        return Process::repl(parse_prefix());
      case Tok::kw_new: {
        next();
        Name n = take_name();
        expect(Tok::dot, "'.'");
        return Process::restriction(std::move(n), parse_prefix());
      }
      case Tok::kw_if: {
        next();
        Term lhs = parse_term();
        expect(Tok::eq, "'='");
        Term rhs = parse_term();
        expect(Tok::kw_then, "'then'");
        Process then_branch = parse_prefix();
        Process else_branch = accept(Tok::kw_else) ? parse_prefix() : Process::nil();
        return Process::cond(std::move(lhs), std::move(rhs), std::move(then_branch),
                             std::move(else_branch));
      }
      case Tok::langle:
        return parse_output_tail(std::nullopt);
      case Tok::quote: {
        // Channel output `'s<...>` or channel input with a term channel
        // `'(s*t)(p,...).P`.
        next();
        Term chan = parse_term_atom();
        if (peek().kind == Tok::langle) return parse_output_tail(chan);
        const Token& at = expect(Tok::lparen, "'<' or '('");
        std::vector<Pattern> pats = parse_pattern_list();
        expect(Tok::rparen, "')'");
        expect(Tok::dot, "'.'");
        return make_input(chan, std::move(pats), parse_prefix(), at);
      }
      case Tok::ident: {
        // Channel input with a name channel: `a(p,...).P`.
        Name chan = take_name();
        const Token& at = expect(Tok::lparen, "'('");
        std::vector<Pattern> pats = parse_pattern_list();
        expect(Tok::rparen, "')'");
        expect(Tok::dot, "'.'");
        return make_input(Term::leaf(std::move(chan)), std::move(pats), parse_prefix(),
                          at);
      }
      case Tok::lparen: {
        // Either a dataspace input `(p,...).P` or a parenthesized process.
        // Try the pattern reading and rewind if it is not followed by `).`;
        // once the dot is seen the input interpretation is the only one.
        const std::size_t saved = pos_;
        next();
        std::optional<std::vector<Pattern>> pats;
        try {
          std::vector<Pattern> ps = parse_pattern_list();
          expect(Tok::rparen, "')'");
          expect(Tok::dot, "'.'");
          pats = std::move(ps);
        } catch (const ParseError&) {
          pos_ = saved;
        }
        if (pats) {
          return make_input(std::nullopt, std::move(*pats), parse_prefix(),
                            tokens_[saved]);
        }
        next();  // reconsume '('
        Process p = parse_parallel();
        expect(Tok::rparen, "')'");
        return p;
      }
      default:
        fail("expected a process, got '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Process parse_process(std::string_view text, const Language& lang,
                      const ParseOptions& opts) {
  Process p = Parser(text, opts).parse_process_all();
  auto violations = conformance_violations(p, lang);
  if (!violations.empty()) throw ConformanceError(std::move(violations));
  return p;
}

Process parse_process_unchecked(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse_process_all();
}

Term parse_term(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse_term_all();
}

Pattern parse_pattern(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse_pattern_all();
}

}  // namespace intens
