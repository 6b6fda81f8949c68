#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

enum class AxiomId { B1, B2, B3, B4, B5a, B5b };

std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> parse_axiom_id(std::string_view text);
const std::vector<AxiomId>& all_axioms();

/// Closed inhabitant of the axiom's type. Unused type arguments are ignored.
Term axiom_term(AxiomId id, const Type& a, const Type& b, const Type& c);
Type axiom_type(AxiomId id, const Type& a, const Type& b, const Type& c);

/// \x:A. break x as <phi, f> @ A in phi f  :  A -> A
Term identity_break(const Type& a);

struct DivisibilityTerms {
  Term t;  // A -> (A -> B) -> B * (B -> A)
  Term u;  // A -> (A -> B) -> B
};

DivisibilityTerms divisibility_terms(const Type& a, const Type& b);

/// \D. \x. break x as <phi, f> @ B in phi (D f)  :  ((B -> A) -> A -> B) -> A -> B
Term axiom_L_term(const Type& a, const Type& b);

/// The building blocks t1 ... t9, pi0, pi1, with their free variables:
///   t1[phi] t2[x, f] t3[x, f, p] t4[alpha, f] t5[phi] t6 t7 t8[g] t9[h, alpha]
std::vector<std::pair<std::string, Term>> homomorphism_parts(const Type& a, const Type& b, const Type& c);

/// \alpha. \h. t9  :  (A -> A * A) -> (A -> B * C) -> (A -> B) * (A -> C)
Term homomorphism_term(const Type& a, const Type& b, const Type& c);

/// Break-free term of type (A * (A -> K) -> K * (K -> A)) -> A -> K * (B -> A)
/// with K = (A -> B) -> B: from a divisibility hypothesis it splits A into
/// K_B A and S_B A.
Term break_free_split(const Type& a, const Type& b);

/// w = break (let <x, y> = t in u) as <phi, f> @ R in s with closed t, u; the
/// b-l-conv overlap.
Term overlap_closed(const Type& a, const Type& b);

/// The same overlap with an open, stuck scrutinee:
///   break (let <x, y> = z in \a. a) as <phi, f> @ R in phi g
Term overlap_open(const Type& a, const Type& b);

/// Catalog entries addressable by name. Type arguments default to atoms A, B, C.
std::vector<std::string> catalog_names();
std::optional<Term> catalog_term(std::string_view name, const Type& a, const Type& b, const Type& c);

}  // namespace bcalc
