#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "bcalc/syntax.hpp"
#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

/// Church-style checking. The context is exactly free_vars(t). Two-premise
/// rules require the variables used by the premises to be disjoint.
/// Throws TypeError (TypeMismatch, AffinityViolation, InconsistentVariable).
Type check(const Term& t);

/// As check, but against an explicit context; a free variable missing from
/// `context` is an UnboundVariable error. Unused entries are allowed.
Type check_in_context(const Term& t, const TypedVarSet& context);

UntypedTerm erase(const Term& t);

/// Principal type of an untyped term. Atom names in `body` are the
/// quantified variables (all of them), renamed a, b, c, ... by first occurrence.
struct TypeScheme {
  Type body;
  std::set<std::string> variables;
  /// Types assigned to the term's free variables, in the same variables.
  std::map<std::string, Type> context;
};

/// Hindley-Milner style inference with occurs check. `break t as <phi,f> in s`
/// gives phi : (a -> b) -> b and f : b -> a for the scrutinee type a and a
/// fresh residue b. Throws InferenceError.
TypeScheme infer_principal(const UntypedTerm& u);

/// Substitution for the scheme's variables turning `scheme.body` into
/// `instance`, if one exists. Atoms outside `scheme.variables` match only themselves.
std::optional<std::map<std::string, Type>> match_instance(const TypeScheme& scheme, const Type& instance);

/// Renders a scheme as its body type; variables are the lowercase atoms.
std::string print_scheme(const TypeScheme& scheme);

}  // namespace bcalc
