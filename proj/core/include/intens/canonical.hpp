#pragma once

#include <string>
#include <vector>

#include "intens/process.hpp"

namespace intens {

/// Normal form under the structural-equivalence laws: parallel unit,
/// associativity and commutativity (threads as a sorted multiset), removal
/// of nil, restriction reordering and maximal scope extrusion, dropping of
/// unused restrictions, conditional resolution outside input prefixes, and
/// canonical renaming of bound names (`#n<i>` restrictions, `#b<i>` pattern
/// bindings). Replication is never unfolded here; `*P = P | *P` is handled
/// operationally by redex enumeration.
struct CanonicalForm {
  std::vector<Name> restricted;  // #n0, #n1, ... in order
  std::vector<Process> threads;  // normalized, sorted by pretty form
  std::string key;               // pretty(to_process(*this)); identity for dedup

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key == b.key;
  }
};

CanonicalForm canonicalize(const Process& p);

/// Rebuilds `new #n0. ... (t0 | t1 | ...)`.
Process to_process(const CanonicalForm& c);

/// Decidable under-approximation of structural equivalence: equal canonical
/// forms. Never equates processes that are not structurally equivalent; does
/// not see `*P = P | *P`.
bool struct_eq(const Process& a, const Process& b);

}  // namespace intens
