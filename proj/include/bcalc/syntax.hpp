#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

/// Finite map from variable name to type.
using TypedVarSet = std::map<std::string, Type>;

/// Simultaneous substitution: each name is replaced by its term.
using Bindings = std::vector<std::pair<std::string, Term>>;

/// Free variables with their types. Throws TypeError(InconsistentVariable)
/// when a name occurs free at two different types.
TypedVarSet free_vars(const Term& t);

/// Names of the free variables, without type consistency checks.
std::set<std::string> free_names(const Term& t);

/// Every name in the term, bound or free.
std::set<std::string> all_names(const Term& t);

bool occurs_free(const Term& t, std::string_view name);

/// Capture-avoiding simultaneous substitution. Bound variables of `t` are
/// renamed whenever they would capture a free variable of a substituted term.
Term substitute(const Term& t, const Bindings& bindings);

/// Equality up to renaming of bound variables. Annotations must match.
bool alpha_eq(const Term& a, const Term& b);

/// Number of term nodes.
std::size_t term_size(const Term& t);

/// Renames binders so that all are pairwise distinct and distinct from every
/// free name. Names are kept wherever they do not collide.
Term canonicalize(const Term& t);

/// True iff no variable occurs free more than once in any subterm.
bool affine_check(const Term& t);

/// Structural type of a well-formed term. Reads annotations only; does not
/// check affinity or that occurrences agree with their binders.
Type type_of(const Term& t);

/// `base` itself if unused, otherwise a primed or numbered variant not in `avoid`.
std::string fresh_name(std::string_view base, const std::set<std::string>& avoid);

const Term& subterm_at(const Term& t, const Path& path);
Term replace_at(const Term& t, const Path& path, Term replacement);

}  // namespace bcalc
