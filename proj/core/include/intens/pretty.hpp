#pragma once

#include <string>

#include "intens/process.hpp"

namespace intens {

/// Canonical text form: single spaces, minimal parentheses, `|` lowest
/// precedence and left-associative, `else 0` omitted. Parsing the result
/// reconstructs the process exactly (see parse_process).
std::string pretty(const Process& p);

}  // namespace intens
