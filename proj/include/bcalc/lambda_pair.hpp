#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bcalc/reduction.hpp"
#include "bcalc/term.hpp"
#include "bcalc/type.hpp"

namespace bcalc {

enum class LKind { Var, Lam, App, Pair, Proj0, Proj1 };

/// A term of the simply typed lambda calculus with pairs and projections.
/// Variables are untyped; binders carry types. Contraction is allowed.
class LTerm {
public:
  static LTerm var(std::string name);
  static LTerm lam(std::string binder, Type binder_type, LTerm body);
  static LTerm app(LTerm fun, LTerm arg);
  static LTerm pair(LTerm first, LTerm second);
  static LTerm proj0(LTerm arg);
  static LTerm proj1(LTerm arg);

  LKind kind() const noexcept;
  bool is(LKind k) const noexcept { return kind() == k; }

  const std::string& name() const;  // Var name or Lam binder
  const Type& binder_type() const;
  std::size_t arity() const noexcept;
  const LTerm& child(std::size_t i) const;
  LTerm with_child(std::size_t i, LTerm c) const;

  const LTerm& body() const { return child(0); }
  const LTerm& fun() const { return child(0); }
  const LTerm& arg() const { return is(LKind::App) ? child(1) : child(0); }
  const LTerm& first() const { return child(0); }
  const LTerm& second() const { return child(1); }

  /// Annotation carried through substitution and ignored by equality. Zero
  /// means unmarked.
  std::uint32_t mark() const noexcept;
  LTerm with_mark(std::uint32_t m) const;

private:
  struct Node;
  explicit LTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using LBindings = std::vector<std::pair<std::string, LTerm>>;

std::set<std::string> l_free_names(const LTerm& e);
LTerm l_subst(const LTerm& e, const LBindings& bindings);
bool l_alpha_eq(const LTerm& a, const LTerm& b);
std::size_t l_size(const LTerm& e);

/// Type of `e` with free variables typed by `env`; `*` is read as product.
/// Throws TypeError.
Type l_check(const LTerm& e, const std::map<std::string, Type>& env);

/// Every one-step reduct (beta, p0 <a,b> -> a, p1 <a,b> -> b), deduplicated up to alpha.
std::vector<LTerm> l_step(const LTerm& e);

/// Leftmost-outermost normalization. Throws ReductionError(StepBudgetExceeded).
/// If `steps` is given it receives the number of contractions.
LTerm l_normalize(const LTerm& e, std::size_t max_steps = 100000, std::size_t* steps = nullptr);

/// Projections are printed `p0 e` and `p1 e`.
std::string print_lterm(const LTerm& e);

/// let <x,y> = s in u  =>  u*[p0 s*/x, p1 s*/y]
/// break s as <phi,f> @ B in u  =>  u*[k0 s*/phi, k1 s*/f]
/// with k0 = \x:A. \p:A -> B. p x and k1 = \x:A. \_:B. x inlined.
LTerm star_translate(const Term& t);

/// (s[t/x])* is alpha-equal to s*[t*/x].
bool check_substitution_lemma(const Term& s, const Term& t, const std::string& x);

struct StepVerdict {
  enum class Clause {
    Reduces,   // t* reduces to t'* in lambda_steps standard steps
    Identical  // t* and t'* are alpha-equal
  };
  Clause clause;
  std::size_t lambda_steps = 0;
};

/// For a non-silent standard step, contracts every image of the redex in t*
/// and compares with (t')*; for a silent or permuting step, compares t* with
/// (t')* directly. Throws MappingFailure if the expected relation fails.
/// A non-silent step whose redex has no image in t* yields Reduces with zero steps.
StepVerdict check_step_mapping(const Term& t, const Redex& r);

}  // namespace bcalc
