#include "intens/corpus.hpp"

#include <fstream>
#include <sstream>

#include "intens/parse.hpp"
#include "intens/pretty.hpp"

namespace intens {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<SourceUnit> parse_corpus(std::string_view text, const std::string& origin) {
  std::vector<SourceUnit> out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++lineno;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::string where = origin + ":" + std::to_string(lineno);
    if (!line.starts_with("unit ")) {
      throw CorpusError(where + ": expected 'unit <name> @ <LANG> := <process>'");
    }
    line.remove_prefix(5);

    const std::size_t at = line.find('@');
    if (at == std::string_view::npos) {
      throw CorpusError(where + ": missing '@' language marker");
    }
    const std::string name{trim(line.substr(0, at))};
    if (name.empty()) throw CorpusError(where + ": empty unit name");

    std::string_view rest = line.substr(at + 1);
    const std::size_t assign = rest.find(":=");
    if (assign == std::string_view::npos) {
      throw CorpusError(where + ": missing ':=' before the process text");
    }
    const std::string lang_code{trim(rest.substr(0, assign))};
    auto lang = language_from_code(lang_code);
    if (!lang) {
      throw CorpusError(where + ": unit '" + name + "': unknown language code '" +
                        lang_code + "'");
    }

    const std::string_view body_text = trim(rest.substr(assign + 2));
    try {
      Process body = parse_process(body_text, *lang);
      out.push_back(SourceUnit{name, *lang, std::move(body)});
    } catch (const std::exception& e) {
      throw CorpusError(where + ": unit '" + name + "': " + e.what());
    }
  }
  return out;
}

std::vector<SourceUnit> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), path.string());
}

std::string to_corpus_line(const SourceUnit& unit) {
  return "unit " + unit.name + " @ " + code(unit.language) + " := " + pretty(unit.body);
}

}  // namespace intens
