#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

/// Gamma |- C with Gamma a multiset, kept sorted so that equal multisets
/// compare equal.
class Sequent {
public:
  Sequent(std::vector<Type> antecedent, Type succedent);

  const std::vector<Type>& antecedent() const noexcept { return antecedent_; }
  const Type& succedent() const noexcept { return succedent_; }

  friend bool operator==(const Sequent&, const Sequent&) = default;

private:
  std::vector<Type> antecedent_;
  Type succedent_;
};

std::string print_sequent(const Sequent& s);

enum class SRule { Asm, Cut, Brk, ArrR, ArrL, TensR, TensL };

std::string_view srule_name(SRule r);
std::optional<SRule> parse_srule(std::string_view text);

/// One node of a derivation. Premise shapes:
///   Asm   (none)                                   Gamma, A |- A
///   Cut   Gamma |- A ; Delta, A |- C               Gamma, Delta |- C
///   Brk   Gamma |- A ; Delta, K_B A, S_B A |- C    Gamma, Delta |- C
///   ArrR  Gamma, A |- B                            Gamma |- A -> B
///   ArrL  Gamma |- A ; Delta, B |- C               Gamma, Delta, A -> B |- C
///   TensR Gamma |- A ; Delta |- B                  Gamma, Delta |- A * B
///   TensL Gamma, A, B |- C                         Gamma, A * B |- C
/// `formula` is the cut formula (Cut), the residue B (Brk) or the principal
/// formula (ArrL, TensL); other rules leave it empty. The antecedent split
/// of a two-premise rule is read off the premises.
struct SDerivation {
  SRule rule;
  Sequent conclusion;
  std::vector<SDerivation> premises;
  std::optional<Type> formula;
};

// Builders. Each computes its conclusion from the premises; `b` in make_arr_l
// is the assumption B consumed from the right premise.
SDerivation make_asm(std::vector<Type> context, Type a);
SDerivation make_cut(SDerivation left, SDerivation right);
SDerivation make_brk(SDerivation left, SDerivation right, Type residue);
SDerivation make_arr_r(SDerivation premise, const Type& a);
SDerivation make_arr_l(SDerivation left, SDerivation right, const Type& b);
SDerivation make_tens_r(SDerivation left, SDerivation right);
SDerivation make_tens_l(SDerivation premise, const Type& a, const Type& b);

/// Validates every node and returns the end sequent. Throws
/// DerivationError(InvalidRule) with the path of the first failing node
/// (preorder).
Sequent check_derivation(const SDerivation& d);

/// Adds `extra` to the end sequent, absorbed by an axiom.
SDerivation weaken(const SDerivation& d, const std::vector<Type>& extra);

std::size_t node_count(const SDerivation& d);
std::size_t height(const SDerivation& d);
std::size_t count_rule(const SDerivation& d, SRule r);

/// Derivation of (types of free_vars(t)) |- check(t).
SDerivation nd_to_sequent(const Term& t);

/// A term of the succedent type whose free variables are named h0, h1, ...
/// in antecedent order.
Term sequent_to_term(const SDerivation& d);

/// Cut-free derivation of the same end sequent. Break nodes are kept.
/// Throws DerivationError(BudgetExceeded) after `node_budget` constructed nodes.
SDerivation eliminate_cuts(const SDerivation& d, std::size_t node_budget = 1000000);

/// Break with an empty left context replaced by two cuts. `d_a` proves |- A
/// and `d_c` proves Delta, K_B A, S_B A |- C. The residue is read from d_c's
/// antecedent unless given. Throws DerivationError(PreconditionViolation).
SDerivation brk_via_cut_empty(const SDerivation& d_a, const SDerivation& d_c,
                              std::optional<Type> residue = std::nullopt);

enum class Superfluous { K, S };

/// Break whose K (or S) assumption is unused, replaced by a single cut.
/// `d_c` proves Delta, S_B A |- C (K superfluous) or Delta, K_B A |- C (S
/// superfluous). `d_a` may have a nonempty antecedent.
SDerivation brk_via_cut_superfluous(const SDerivation& d_a, const SDerivation& d_c, Superfluous which,
                                    const Type& residue);

/// Depth-bounded search for a derivation using neither Cut nor Brk.
std::optional<SDerivation> search_cut_free(const Sequent& goal, std::size_t max_depth = 8);

/// Text format, one node per line, premises indented:
///   (RULE [formula] A, B |- C
///     premise ...)
/// where [formula] appears only for Cut, Brk, ArrL and TensL.
std::string print_derivation(const SDerivation& d);
/// Throws ParseError.
SDerivation parse_derivation(std::string_view text);

}  // namespace bcalc
