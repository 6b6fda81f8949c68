#pragma once

#include <string_view>

#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

// Concrete syntax (ASCII):
//
//   type  := A | type -> type | type * type | ( type )
//            `*` binds tighter than `->`; `->` is right-, `*` left-associative.
//   term  := \x:T. term                                 (body extends right)
//          | let <x:T1, y:T2> = term in term
//          | break term as <phi, f> @ B in term         (B is the residue)
//          | term term                                  (left-associative)
//          | <term, term> | ( term ) | ( x : T ) | x
//
// Identifiers are [A-Za-z_][A-Za-z0-9_']*; `let in break as` are reserved.
// `--` starts a line comment. A free variable carries an ascription `(x : T)`
// at its first occurrence; later occurrences may omit it. A binder form may
// appear unparenthesised as the last argument of an application.

/// Throws ParseError.
Type parse_type(std::string_view text);

/// Parses and elaborates a Church-style term, then canonicalizes binder names.
/// Throws ParseError on syntax errors, missing annotations, duplicate binders
/// in one let/break, and free variables without an ascription.
Term parse_term(std::string_view text);

/// Parses the same grammar with every annotation optional and ignored.
UntypedTerm parse_untyped_term(std::string_view text);

}  // namespace bcalc
