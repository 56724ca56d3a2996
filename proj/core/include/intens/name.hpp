#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace intens {

/// A channel/term/binding identifier. Names starting with '#' are reserved
/// for machinery (encodings, fresh-name generation, canonical numbering) and
/// are rejected by the user-facing parser.
class Name {
 public:
  explicit Name(std::string text);

  const std::string& str() const { return text_; }
  bool reserved() const { return !text_.empty() && text_[0] == '#'; }

  friend bool operator==(const Name& a, const Name& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    return a.text_ <=> b.text_;
  }

 private:
  std::string text_;
};

/// True iff `text` is nonempty and starts with a letter or '#'.
bool valid_name_text(std::string_view text);

// Reserved-namespace constructors. User programs cannot mention these, which
// is what lets the encodings pick names that are guaranteed not to collide.
Name reserved_tag();              // "#r"   arity-encoding spine tag
Name reserved_fresh(int n);       // "#f<n>" fresh names (acks, capture avoidance)
Name reserved_ack_tag(int n);     // "#g<n>" free tags leaked by a broken encoder
Name reserved_channel(int arity); // "#k<arity>" dataspace-to-channel subjects
Name canonical_restricted(int n); // "#n<n>" canonical restriction names
Name canonical_binding(int n);    // "#b<n>" canonical binding names
Name canonical_temp(int n);       // "#t<n>" internal normalization scratch names

struct NameHash {
  std::size_t operator()(const Name& n) const {
    return std::hash<std::string>{}(n.str());
  }
};

}  // namespace intens
