#include "bcalc/lambda_pair.hpp"

#include <algorithm>
#include <optional>

#include "bcalc/error.hpp"
#include "bcalc/print.hpp"
#include "bcalc/syntax.hpp"

namespace bcalc {

struct LTerm::Node {
  LKind kind;
  std::string name;
  std::optional<Type> type;
  std::vector<LTerm> kids;
  std::uint32_t mark = 0;
};

LTerm LTerm::var(std::string name) { return LTerm(std::make_shared<const Node>(Node{LKind::Var, std::move(name), {}, {}})); }

LTerm LTerm::lam(std::string binder, Type binder_type, LTerm body) {
  return LTerm(std::make_shared<const Node>(Node{LKind::Lam, std::move(binder), std::move(binder_type), {std::move(body)}}));
}

LTerm LTerm::app(LTerm fun, LTerm arg) {
  return LTerm(std::make_shared<const Node>(Node{LKind::App, {}, {}, {std::move(fun), std::move(arg)}}));
}

LTerm LTerm::pair(LTerm first, LTerm second) {
  return LTerm(std::make_shared<const Node>(Node{LKind::Pair, {}, {}, {std::move(first), std::move(second)}}));
}

LTerm LTerm::proj0(LTerm arg) { return LTerm(std::make_shared<const Node>(Node{LKind::Proj0, {}, {}, {std::move(arg)}})); }

LTerm LTerm::proj1(LTerm arg) { return LTerm(std::make_shared<const Node>(Node{LKind::Proj1, {}, {}, {std::move(arg)}})); }

LKind LTerm::kind() const noexcept { return node_->kind; }

const std::string& LTerm::name() const {
  if (!is(LKind::Var) && !is(LKind::Lam)) throw Error("LTerm::name on a non-variable node");
  return node_->name;
}

const Type& LTerm::binder_type() const {
  if (!is(LKind::Lam)) throw Error("LTerm::binder_type on a non-abstraction");
  return *node_->type;
}

std::size_t LTerm::arity() const noexcept { return node_->kids.size(); }

const LTerm& LTerm::child(std::size_t i) const {
  if (i >= arity()) throw Error("LTerm child index out of range");
  return node_->kids[i];
}

LTerm LTerm::with_child(std::size_t i, LTerm c) const {
  Node n = *node_;
  if (i >= n.kids.size()) throw Error("LTerm child index out of range");
  n.kids[i] = std::move(c);
  return LTerm(std::make_shared<const Node>(std::move(n)));
}

std::uint32_t LTerm::mark() const noexcept { return node_->mark; }

LTerm LTerm::with_mark(std::uint32_t m) const {
  Node n = *node_;
  n.mark = m;
  return LTerm(std::make_shared<const Node>(std::move(n)));
}

namespace {

void free_into(const LTerm& e, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (e.kind()) {
    case LKind::Var:
      if (std::find(bound.begin(), bound.end(), e.name()) == bound.end()) out.insert(e.name());
      return;
    case LKind::Lam:
      bound.push_back(e.name());
      free_into(e.body(), bound, out);
      bound.pop_back();
      return;
    default:
      for (std::size_t i = 0; i < e.arity(); ++i) free_into(e.child(i), bound, out);
  }
}

void names_into(const LTerm& e, std::set<std::string>& out) {
  if (e.is(LKind::Var) || e.is(LKind::Lam)) out.insert(e.name());
  for (std::size_t i = 0; i < e.arity(); ++i) names_into(e.child(i), out);
}

using LSigma = std::map<std::string, LTerm>;

// Rebuilds `e` with new children, keeping its mark.
LTerm rebuild(const LTerm& e, std::vector<LTerm> kids) {
  LTerm out = e;
  for (std::size_t i = 0; i < kids.size(); ++i) out = out.with_child(i, std::move(kids[i]));
  return out;
}

LTerm subst(const LTerm& e, const LSigma& sigma, const std::set<std::string>& range_fv) {
  if (sigma.empty()) return e;
  switch (e.kind()) {
    case LKind::Var: {
      auto it = sigma.find(e.name());
      return it == sigma.end() ? e : it->second;
    }
    case LKind::Lam: {
      LSigma inner = sigma;
      inner.erase(e.name());
      if (inner.empty()) return e;
      std::string binder = e.name();
      auto rfv = range_fv;
      if (rfv.contains(binder)) {
        std::set<std::string> avoid = rfv;
        names_into(e.body(), avoid);
        for (auto& [k, _] : inner) avoid.insert(k);
        binder = fresh_name(e.name(), avoid);
        inner.insert_or_assign(e.name(), LTerm::var(binder));
        rfv.insert(binder);
      }
      return LTerm::lam(binder, e.binder_type(), subst(e.body(), inner, rfv)).with_mark(e.mark());
    }
    default: {
      std::vector<LTerm> kids;
      for (std::size_t i = 0; i < e.arity(); ++i) kids.push_back(subst(e.child(i), sigma, range_fv));
      return rebuild(e, std::move(kids));
    }
  }
}

using Env = std::vector<std::string>;

long lookup(const Env& env, const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == name) return static_cast<long>(i);
  return -1;
}

bool alpha(const LTerm& a, const LTerm& b, Env& ea, Env& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LKind::Var: {
      long ia = lookup(ea, a.name()), ib = lookup(eb, b.name());
      if (ia != ib) return false;
      return ia >= 0 || a.name() == b.name();
    }
    case LKind::Lam: {
      if (!(a.binder_type() == b.binder_type())) return false;
      ea.push_back(a.name());
      eb.push_back(b.name());
      bool r = alpha(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    default:
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (!alpha(a.child(i), b.child(i), ea, eb)) return false;
      return true;
  }
}

bool is_redex(const LTerm& e) {
  switch (e.kind()) {
    case LKind::App: return e.fun().is(LKind::Lam);
    case LKind::Proj0:
    case LKind::Proj1: return e.arg().is(LKind::Pair);
    default: return false;
  }
}

LTerm contract(const LTerm& e) {
  if (e.is(LKind::App)) return l_subst(e.fun().body(), {{e.fun().name(), e.arg()}});
  return e.arg().child(e.is(LKind::Proj0) ? 0 : 1);
}

// Leftmost-outermost redex satisfying `want`, contracted in place.
template <typename Pred>
std::optional<LTerm> step_first(const LTerm& e, const Pred& want) {
  if (is_redex(e) && want(e)) return contract(e);
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (auto c = step_first(e.child(i), want)) return e.with_child(i, std::move(*c));
  }
  return std::nullopt;
}

void all_steps(const LTerm& e, std::vector<LTerm>& out) {
  if (is_redex(e)) out.push_back(contract(e));
  for (std::size_t i = 0; i < e.arity(); ++i) {
    std::vector<LTerm> inner;
    all_steps(e.child(i), inner);
    for (auto& c : inner) out.push_back(e.with_child(i, std::move(c)));
  }
}

struct Printer {
  std::string out;

  // ctx: 0 = anything, 1 = function head, 2 = argument
  void go(const LTerm& e, int ctx) {
    switch (e.kind()) {
      case LKind::Var: out += e.name(); return;
      case LKind::Pair:
        out += '<';
        go(e.first(), 0);
        out += ", ";
        go(e.second(), 0);
        out += '>';
        return;
      case LKind::Lam:
        if (ctx != 0) out += '(';
        out += "\\" + e.name() + ":" + print_type(e.binder_type()) + ". ";
        go(e.body(), 0);
        if (ctx != 0) out += ')';
        return;
      default: {
        bool parens = ctx == 2;
        if (parens) out += '(';
        if (e.is(LKind::App)) {
          go(e.fun(), 1);
        } else {
          out += e.is(LKind::Proj0) ? "p0" : "p1";
        }
        out += ' ';
        go(e.arg(), 2);
        if (parens) out += ')';
      }
    }
  }
};

constexpr std::uint32_t kRedexImage = 1;

class Translator {
public:
  explicit Translator(std::optional<Redex> target = std::nullopt) : target_(std::move(target)) {}

  LTerm run(const Term& t) { return go(t); }

private:
  bool at_target(RuleName rule) const { return target_ && target_->rule == rule && target_->position == path_; }

  LTerm child(const Term& t, std::size_t i) {
    path_.push_back(i);
    LTerm r = go(t.child(i));
    path_.pop_back();
    return r;
  }

  LTerm go(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var: return LTerm::var(t.name());
      case TermKind::Lam: return LTerm::lam(t.binder(), t.binder_type(), child(t, 0));
      case TermKind::App: {
        LTerm e = LTerm::app(child(t, 0), child(t, 1));
        return at_target(RuleName::Beta) ? e.with_mark(kRedexImage) : e;
      }
      case TermKind::Pair: return LTerm::pair(child(t, 0), child(t, 1));
      case TermKind::Let: {
        LTerm s = child(t, 0);
        LTerm body = child(t, 1);
        LTerm p0 = LTerm::proj0(s), p1 = LTerm::proj1(s);
        if (at_target(RuleName::LConv)) {
          p0 = p0.with_mark(kRedexImage);
          p1 = p1.with_mark(kRedexImage);
        }
        return l_subst(body, {{t.x(), p0}, {t.y(), p1}});
      }
      case TermKind::Break: {
        LTerm s = child(t, 0);
        LTerm body = child(t, 1);
        Type a = type_of(t.scrutinee());
        const Type& b = t.residue();
        Type ab = Type::arrow(a, b);
        LTerm k0 = LTerm::lam("x", a, LTerm::lam("p", ab, LTerm::app(LTerm::var("p"), LTerm::var("x"))));
        LTerm k1 = LTerm::lam("x", a, LTerm::lam("_", b, LTerm::var("x")));
        LTerm phi = LTerm::app(k0, s), f = LTerm::app(k1, s);
        if (at_target(RuleName::BConv)) {
          phi = phi.with_mark(kRedexImage);
          f = f.with_mark(kRedexImage);
        }
        return l_subst(body, {{t.phi(), phi}, {t.f(), f}});
      }
    }
    throw Error("unknown term kind");
  }

  std::optional<Redex> target_;
  Path path_;
};

}  // namespace

std::set<std::string> l_free_names(const LTerm& e) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  free_into(e, bound, out);
  return out;
}

LTerm l_subst(const LTerm& e, const LBindings& bindings) {
  LSigma sigma;
  std::set<std::string> range_fv;
  for (auto& [name, value] : bindings) {
    sigma.insert_or_assign(name, value);
    auto fv = l_free_names(value);
    range_fv.insert(fv.begin(), fv.end());
  }
  return subst(e, sigma, range_fv);
}

bool l_alpha_eq(const LTerm& a, const LTerm& b) {
  Env ea, eb;
  return alpha(a, b, ea, eb);
}

std::size_t l_size(const LTerm& e) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < e.arity(); ++i) n += l_size(e.child(i));
  return n;
}

Type l_check(const LTerm& e, const std::map<std::string, Type>& env) {
  switch (e.kind()) {
    case LKind::Var: {
      auto it = env.find(e.name());
      if (it == env.end())
        throw TypeError(TypeError::Kind::UnboundVariable, {}, "unbound variable " + e.name(), std::nullopt,
                        std::nullopt, e.name());
      return it->second;
    }
    case LKind::Lam: {
      auto inner = env;
      inner.insert_or_assign(e.name(), e.binder_type());
      return Type::arrow(e.binder_type(), l_check(e.body(), inner));
    }
    case LKind::App: {
      Type f = l_check(e.fun(), env);
      Type a = l_check(e.arg(), env);
      if (!f.is_arrow() || !(f.dom() == a))
        throw TypeError(TypeError::Kind::TypeMismatch, {},
                        "cannot apply " + print_type(f) + " to " + print_type(a), std::nullopt, a);
      return f.cod();
    }
    case LKind::Pair: return Type::tensor(l_check(e.first(), env), l_check(e.second(), env));
    case LKind::Proj0:
    case LKind::Proj1: {
      Type p = l_check(e.arg(), env);
      if (!p.is_tensor())
        throw TypeError(TypeError::Kind::TypeMismatch, {}, "projection from non-product " + print_type(p),
                        std::nullopt, p);
      return e.is(LKind::Proj0) ? p.left() : p.right();
    }
  }
  throw Error("unknown LTerm kind");
}

std::vector<LTerm> l_step(const LTerm& e) {
  std::vector<LTerm> all, out;
  all_steps(e, all);
  for (auto& c : all) {
    bool seen = false;
    for (auto& o : out) seen = seen || l_alpha_eq(o, c);
    if (!seen) out.push_back(c);
  }
  return out;
}

LTerm l_normalize(const LTerm& e, std::size_t max_steps, std::size_t* steps) {
  LTerm cur = e;
  std::size_t n = 0;
  auto any = [](const LTerm&) { return true; };
  while (auto next = step_first(cur, any)) {
    if (n >= max_steps)
      throw ReductionError(ReductionError::Kind::StepBudgetExceeded,
                           "no normal form within " + std::to_string(max_steps) + " steps");
    cur = std::move(*next);
    ++n;
  }
  if (steps) *steps = n;
  return cur;
}

std::string print_lterm(const LTerm& e) {
  Printer p;
  p.go(e, 0);
  return std::move(p.out);
}

LTerm star_translate(const Term& t) { return Translator().run(t); }

bool check_substitution_lemma(const Term& s, const Term& t, const std::string& x) {
  LTerm lhs = star_translate(substitute(s, {{x, t}}));
  LTerm rhs = l_subst(star_translate(s), {{x, star_translate(t)}});
  return l_alpha_eq(lhs, rhs);
}

StepVerdict check_step_mapping(const Term& t0, const Redex& r) {
  Term t = canonicalize(t0);
  Term next = apply_step(t, r);
  LTerm target = star_translate(next);

  if (is_permuting(r.rule) || is_silent(t, r)) {
    if (!l_alpha_eq(star_translate(t), target))
      throw MappingFailure(std::string(rule_name(r.rule)) + " at " + format_path(r.position) +
                           " changes the translation");
    return {StepVerdict::Clause::Identical, 0};
  }

  LTerm cur = Translator(r).run(t);
  std::size_t steps = 0;
  auto marked = [](const LTerm& e) { return e.mark() == kRedexImage; };
  while (auto n = step_first(cur, marked)) {
    cur = std::move(*n);
    ++steps;
  }
  if (!l_alpha_eq(cur, target))
    throw MappingFailure(std::string(rule_name(r.rule)) + " at " + format_path(r.position) +
                         ": contracting the redex images does not reach the translated reduct");
  return {StepVerdict::Clause::Reduces, steps};
}

}  // namespace bcalc
