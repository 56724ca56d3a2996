#include "intens/pretty.hpp"

namespace intens {

namespace {

// `guard` is true when an `else` belonging to an enclosing conditional will
// follow the printed text: a trailing else-less conditional must then be
// parenthesized or the else would attach to it on reparse.
void print_proc(const Process& p, std::string& out, bool guard);

void print_operand(const Process& p, std::string& out, bool guard) {
  if (p.kind() == Process::Kind::par) {
    out += '(';
    print_proc(p, out, false);
    out += ')';
    return;
  }
  print_proc(p, out, guard);
}

void print_channel(const Term& chan, std::string& out, bool quote_leaf) {
  if (chan.is_leaf()) {
    if (quote_leaf) out += '\'';
    out += chan.name().str();
  } else {
    out += "'(";
    out += pretty(chan);
    out += ')';
  }
}

void print_proc(const Process& p, std::string& out, bool guard) {
  switch (p.kind()) {
    case Process::Kind::nil:
      out += '0';
      return;
    case Process::Kind::ok:
      out += "ok";
      return;
    case Process::Kind::par:
      // Left-associative; a right child parallel keeps its parentheses. The
      // left child is followed by `|`, so no else can reach into it.
      if (p.left().kind() == Process::Kind::par) {
        print_proc(p.left(), out, false);
      } else {
        print_operand(p.left(), out, false);
      }
      out += " | ";
      print_operand(p.right(), out, guard);
      return;
    case Process::Kind::output: {
      if (p.channel()) print_channel(*p.channel(), out, /*quote_leaf=*/true);
      out += '<';
      bool first = true;
      for (const Term& t : p.args()) {
        if (!first) out += ',';
        first = false;
        out += pretty(t);
      }
      out += '>';
      if (p.continuation()) {
        out += '.';
        print_operand(*p.continuation(), out, guard);
      }
      return;
    }
    case Process::Kind::input: {
      if (p.channel()) print_channel(*p.channel(), out, /*quote_leaf=*/false);
      out += '(';
      bool first = true;
      for (const Pattern& pat : p.patterns()) {
        if (!first) out += ',';
        first = false;
        out += pretty(pat);
      }
      out += ").";
      print_operand(p.input_continuation(), out, guard);
      return;
    }
    case Process::Kind::restriction:
      out += "new ";
      out += p.restricted_name().str();
      out += '.';
      print_operand(p.body(), out, guard);
      return;
    case Process::Kind::repl:
      out += '!';
      print_operand(p.body(), out, guard);
      return;
    case Process::Kind::cond: {
      const bool has_else = p.else_branch().kind() != Process::Kind::nil;
      if (!has_else && guard) {
        out += '(';
        print_proc(p, out, false);
        out += ')';
        return;
      }
      out += "if ";
      out += pretty(p.cond_lhs());
      out += " = ";
      out += pretty(p.cond_rhs());
      out += " then ";
      print_operand(p.then_branch(), out, has_else ? true : guard);
      if (has_else) {
        out += " else ";
        print_operand(p.else_branch(), out, guard);
      }
      return;
    }
  }
}

}  // namespace

std::string pretty(const Process& p) {
  std::string out;
  print_proc(p, out, false);
  return out;
}

}  // namespace intens
