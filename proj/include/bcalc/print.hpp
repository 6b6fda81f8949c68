#pragma once

#include <string>

#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

/// Minimal-parentheses rendering accepted by parse_type.
std::string print_type(const Type& t);

/// Minimal-parentheses rendering accepted by parse_term. Binders are
/// canonicalized first; each free variable is ascribed at its first occurrence.
std::string print_term(const Term& t);

std::string print_untyped(const UntypedTerm& t);

}  // namespace bcalc
