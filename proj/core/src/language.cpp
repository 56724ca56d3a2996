#include "intens/language.hpp"

namespace intens {

bool leq(Language a, Language b) {
  const bool sync_ok = a.synchronism == b.synchronism ||
                       a.synchronism == Synchronism::asynchronous;
  const bool arity_ok = a.arity == b.arity || a.arity == DataArity::monadic;
  const bool medium_ok = a.medium == b.medium || a.medium == Medium::dataspace;
  const bool match_ok = static_cast<int>(a.matching) <= static_cast<int>(b.matching);
  return sync_ok && arity_ok && medium_ok && match_ok;
}

std::string code(const Language& l) {
  std::string out;
  out += l.synchronism == Synchronism::asynchronous ? 'A' : 'S';
  out += l.arity == DataArity::monadic ? 'M' : 'P';
  out += l.medium == Medium::dataspace ? 'D' : 'C';
  switch (l.matching) {
    case MatchDegree::no_matching: out += 'O'; break;
    case MatchDegree::name_matching: out += 'N'; break;
    case MatchDegree::intensional: out += 'I'; break;
  }
  return out;
}

std::optional<Language> language_from_code(std::string_view c) {
  if (c.size() != 4) return std::nullopt;
  Language l{};
  switch (c[0]) {
    case 'A': l.synchronism = Synchronism::asynchronous; break;
    case 'S': l.synchronism = Synchronism::synchronous; break;
    default: return std::nullopt;
  }
  switch (c[1]) {
    case 'M': l.arity = DataArity::monadic; break;
    case 'P': l.arity = DataArity::polyadic; break;
    default: return std::nullopt;
  }
  switch (c[2]) {
    case 'D': l.medium = Medium::dataspace; break;
    case 'C': l.medium = Medium::channel; break;
    default: return std::nullopt;
  }
  switch (c[3]) {
    case 'O': l.matching = MatchDegree::no_matching; break;
    case 'N': l.matching = MatchDegree::name_matching; break;
    case 'I': l.matching = MatchDegree::intensional; break;
    default: return std::nullopt;
  }
  return l;
}

const std::vector<Language>& all_languages() {
  static const std::vector<Language> langs = [] {
    std::vector<Language> out;
    for (auto sync : {Synchronism::asynchronous, Synchronism::synchronous}) {
      for (auto arity : {DataArity::monadic, DataArity::polyadic}) {
        for (auto medium : {Medium::dataspace, Medium::channel}) {
          for (auto matching : {MatchDegree::no_matching, MatchDegree::name_matching,
                                MatchDegree::intensional}) {
            out.push_back(Language{sync, arity, medium, matching});
          }
        }
      }
    }
    return out;
  }();
  return langs;
}

}  // namespace intens
