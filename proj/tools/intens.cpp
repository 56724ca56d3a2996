// Workbench front end: parse, trace, encode, verify, succeeds.
//
// Exit codes: 0 success, 1 input error, 2 impossible encoding target,
// 3 bound-limited verdict.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "intens/corpus.hpp"
#include "intens/encode.hpp"
#include "intens/parse.hpp"
#include "intens/pretty.hpp"
#include "intens/reduce.hpp"
#include "intens/validity.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_unreachable = 2;
constexpr int exit_bounded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

intens::Language parse_lang(const std::string& code) {
  auto lang = intens::language_from_code(code);
  if (!lang) throw std::runtime_error("unknown language code '" + code + "'");
  return *lang;
}

intens::SynchMutation parse_mutant(const std::string& name) {
  if (name.empty() || name == "none") return intens::SynchMutation::none;
  if (name == "drop-ack") return intens::SynchMutation::drop_ack;
  if (name == "drop-ok") return intens::SynchMutation::drop_ok;
  if (name == "loop-ack") return intens::SynchMutation::loop_ack;
  if (name == "tag-ack") return intens::SynchMutation::tag_ack;
  throw std::runtime_error("unknown mutant '" + name +
                           "' (expected drop-ack, drop-ok, loop-ack, or tag-ack)");
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

struct TraceFlags {
  bool graph_only = false;
  bool dot = false;
};

int run_parse(const std::string& file, const std::string& lang_code) {
  const intens::Language lang = parse_lang(lang_code);
  const intens::Process p = intens::parse_process(read_file(file), lang);
  std::cout << intens::pretty(p) << "\n";
  return exit_ok;
}

int run_trace(const std::string& file, const std::string& lang_code,
              const intens::Limits& limits, const TraceFlags& flags) {
  const intens::Language lang = parse_lang(lang_code);
  const intens::Process p = intens::parse_process(read_file(file), lang);
  const intens::ReductionGraph g = intens::explore(p, lang, limits);
  if (flags.dot) {
    std::cout << intens::to_dot(g);
    return exit_ok;
  }
  std::cout << intens::to_edge_list(g);
  if (!flags.graph_only) {
    std::size_t edge_count = 0;
    for (const auto& succ : g.edges) edge_count += succ.size();
    std::cout << "nodes: " << g.nodes.size() << "  edges: " << edge_count
              << "  success: " << (g.has_success() ? "yes" : "no")
              << "  cycle: " << (g.cycle_found ? "yes" : "no")
              << "  truncated: " << (g.truncated ? "yes" : "no") << "\n";
  }
  return exit_ok;
}

int run_encode(const std::string& file, const std::string& from_code,
               const std::string& to_code, const std::string& mutant) {
  const intens::Language from = parse_lang(from_code);
  const intens::Language to = parse_lang(to_code);
  const intens::Process p = intens::parse_process(read_file(file), from);
  const intens::Process encoded =
      intens::encode_to(p, from, to, parse_mutant(mutant));
  std::cout << intens::to_corpus_line(
                   intens::SourceUnit{file_stem(file), to, encoded})
            << "\n";
  return exit_ok;
}

int run_verify(const std::string& corpus_path, const std::string& from_code,
               const std::string& to_code, const std::string& mutant,
               const intens::Limits& limits) {
  const intens::Language to = parse_lang(to_code);
  std::vector<intens::SourceUnit> units = intens::load_corpus(corpus_path);
  if (!from_code.empty()) {
    const intens::Language from = parse_lang(from_code);
    std::erase_if(units,
                  [&](const intens::SourceUnit& u) { return !(u.language == from); });
  }
  const auto pipeline = intens::EncodingPipeline::into(to, parse_mutant(mutant));
  const intens::Report report = intens::run_corpus(units, pipeline, limits);
  std::cout << report.text();
  return report.failed == 0 ? exit_ok : exit_input_error;
}

int run_succeeds(const std::string& file, const std::string& lang_code,
                 const intens::Limits& limits) {
  const intens::Language lang = parse_lang(lang_code);
  const intens::Process p = intens::parse_process(read_file(file), lang);
  if (intens::succeeds(p, lang, limits) == intens::SuccessVerdict::yes) {
    std::cout << "Yes\n";
    return exit_ok;
  }
  std::cout << "NotWithinBounds\n";
  return exit_bounded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the 24 process calculi spanned by synchronism, "
               "arity, communication medium, and pattern-matching degree"};
  app.require_subcommand(1);

  std::string file, corpus_path, lang_code, from_code, to_code, mutant;
  intens::Limits limits;
  TraceFlags trace_flags;

  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--depth", limits.depth, "exploration depth limit")
        ->capture_default_str();
    cmd->add_option("--nodes", limits.nodes, "exploration node limit")
        ->capture_default_str();
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and conformance-check");
  parse_cmd->add_option("file", file, "process text file")->required();
  parse_cmd->add_option("--lang", lang_code, "language code, e.g. AMDI")->required();

  CLI::App* trace_cmd = app.add_subcommand("trace", "explore the reduction graph");
  trace_cmd->add_option("file", file, "process text file")->required();
  trace_cmd->add_option("--lang", lang_code, "language code")->required();
  add_limits(trace_cmd);
  trace_cmd->add_flag("--graph", trace_flags.graph_only,
                      "emit only the edge-list format");
  trace_cmd->add_flag("--dot", trace_flags.dot, "emit a Graphviz description");

  CLI::App* encode_cmd = app.add_subcommand("encode", "translate between languages");
  encode_cmd->add_option("file", file, "process text file")->required();
  encode_cmd->add_option("--from", from_code, "source language code")->required();
  encode_cmd->add_option("--to", to_code, "target language code")->required();
  encode_cmd->add_option("--mutant", mutant, "broken encoder variant (tests)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check the valid-encoding criteria on a corpus");
  verify_cmd->add_option("corpus", corpus_path, "corpus file")->required();
  verify_cmd->add_option("--from", from_code, "only check units of this language");
  verify_cmd->add_option("--to", to_code, "target language code")->required();
  verify_cmd->add_option("--mutant", mutant, "broken encoder variant (tests)");
  add_limits(verify_cmd);

  CLI::App* succeeds_cmd =
      app.add_subcommand("succeeds", "is a success state reachable?");
  succeeds_cmd->add_option("file", file, "process text file")->required();
  succeeds_cmd->add_option("--lang", lang_code, "language code")->required();
  add_limits(succeeds_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return run_parse(file, lang_code);
    if (trace_cmd->parsed()) return run_trace(file, lang_code, limits, trace_flags);
    if (encode_cmd->parsed()) return run_encode(file, from_code, to_code, mutant);
    if (verify_cmd->parsed()) {
      return run_verify(corpus_path, from_code, to_code, mutant, limits);
    }
    if (succeeds_cmd->parsed()) return run_succeeds(file, lang_code, limits);
  } catch (const intens::UnreachableTarget& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_unreachable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}
