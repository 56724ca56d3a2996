#include "intens/name.hpp"

#include <cctype>
#include <stdexcept>

namespace intens {

bool valid_name_text(std::string_view text) {
  if (text.empty()) return false;
  const char c = text[0];
  if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '#')) return false;
  for (char ch : text.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

Name::Name(std::string text) : text_(std::move(text)) {
  if (!valid_name_text(text_)) {
    throw std::invalid_argument("invalid name: '" + text_ + "'");
  }
}

Name reserved_tag() { return Name("#r"); }
Name reserved_fresh(int n) { return Name("#f" + std::to_string(n)); }
Name reserved_ack_tag(int n) { return Name("#g" + std::to_string(n)); }
Name reserved_channel(int arity) { return Name("#k" + std::to_string(arity)); }
Name canonical_restricted(int n) { return Name("#n" + std::to_string(n)); }
Name canonical_binding(int n) { return Name("#b" + std::to_string(n)); }
Name canonical_temp(int n) { return Name("#t" + std::to_string(n)); }

}  // namespace intens
