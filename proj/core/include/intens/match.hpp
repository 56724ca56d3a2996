#pragma once

#include <optional>
#include <span>

#include "intens/subst.hpp"

namespace intens {

/// Single-term match `{t // p}`. A binding name takes the whole term; a
/// name-match succeeds (binding nothing) exactly when the term equals its
/// subject; a compound pattern decomposes a compound term componentwise.
/// Returns nullopt when undefined. Ill-formed patterns throw.
std::optional<Substitution> match_one(const Term& t, const Pattern& p);

/// Pointwise match of term and pattern sequences; undefined (nullopt) when
/// arities differ or any component is undefined. Binding names overlapping
/// across the sequence are ill-formed input and throw, since the component
/// substitutions would not be disjoint.
std::optional<Substitution> poly_match(std::span<const Term> ts,
                                       std::span<const Pattern> ps);

}  // namespace intens
