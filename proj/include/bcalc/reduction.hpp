#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcalc/term.hpp"

namespace bcalc {

enum class RuleName {
  Beta,      // (\x. t) s                          ~> t[s/x]
  LConv,     // let <x,y> = <t,u> in s             ~> s[t/x, u/y]
  BConv,     // break t as <phi,f> in s            ~> s[(\p. p t)/phi, (\_. t)/f]
  ApLConv,   // (let <x,y> = t in u) s             ~> let <x,y> = t in u s
  LLConv,    // let <v,w> = (let <x,y> = t in u) in s ~> let <x,y> = t in let <v,w> = u in s
  ApBConv,   // (break t as <phi,f> in u) s        ~> break t as <phi,f> in u s
  LBConv,    // let <x,y> = (break t as <phi,f> in u) in s ~> break t as <phi,f> in let <x,y> = u in s
  BLConv,    // experimental: break (let <x,y> = t in u) as <phi,f> in s ~> let <x,y> = t in break u ...
};

std::string_view rule_name(RuleName r);
std::optional<RuleName> parse_rule_name(std::string_view text);
bool is_standard(RuleName r);
bool is_permuting(RuleName r);

struct ReductionOptions {
  /// Enables b-l-conv. Off everywhere except the counterexample.
  bool experimental_blconv = false;
};

struct Redex {
  Path position;
  RuleName rule;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// Every redex in preorder (leftmost-outermost first). At a single node the
/// rules are listed in declaration order of RuleName.
std::vector<Redex> find_redexes(const Term& t, ReductionOptions options = {});

/// Contracts `r`. The result is canonicalized. Throws ReductionError(InvalidRedex)
/// if `r` does not match `t`.
Term apply_step(const Term& t, const Redex& r, ReductionOptions options = {});

/// Whether an l-conv or b-conv redex discards all of its bound variables.
/// Throws ReductionError(Unclassified) for the other rules.
bool is_silent(const Term& t, const Redex& r);

/// (term size, sum of let/break first-argument sizes, sum of let/break
/// second-argument type sizes), compared lexicographically.
struct Measure {
  std::size_t size = 0;
  std::size_t first_arg_load = 0;
  std::size_t second_arg_type_load = 0;

  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Measure measure(const Term& t);

struct TraceStep {
  RuleName rule;
  Path position;
  Term before;
  Term after;
};

using Trace = std::vector<TraceStep>;

enum class Strategy {
  First,  // leftmost-outermost: first redex in preorder
  Last,   // last redex in preorder
};

struct NormalizeResult {
  Term normal_form;
  Trace trace;
};

/// Throws ReductionError(StepBudgetExceeded) after `max_steps` contractions
/// without reaching a normal form.
NormalizeResult normalize(const Term& t, std::size_t max_steps = 100000, Strategy strategy = Strategy::First,
                          ReductionOptions options = {});

/// Distinct one-step reducts, up to alpha-equivalence, in redex order.
std::vector<Term> reducts_one_step(const Term& t, ReductionOptions options = {});

/// One line per step: `<index> <rule> <path> <term-after>`, index from 1, the
/// root path written as `.`.
void write_trace(std::ostream& out, const Trace& trace);

}  // namespace bcalc
