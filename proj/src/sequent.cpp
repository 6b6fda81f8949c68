#include "bcalc/sequent.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "bcalc/error.hpp"
#include "bcalc/print.hpp"
#include "bcalc/syntax.hpp"
#include "bcalc/typing.hpp"
#include "lexer.hpp"

namespace bcalc {

using Multiset = std::vector<Type>;

namespace {

Multiset sorted(Multiset m) {
  std::sort(m.begin(), m.end());
  return m;
}

Multiset plus(Multiset a, const Multiset& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool contains(const Multiset& m, const Type& t) { return std::find(m.begin(), m.end(), t) != m.end(); }

std::optional<Multiset> minus(Multiset m, const Type& t) {
  auto it = std::find(m.begin(), m.end(), t);
  if (it == m.end()) return std::nullopt;
  m.erase(it);
  return m;
}

[[noreturn]] void invalid(const Path& path, const std::string& message) {
  throw DerivationError(DerivationError::Kind::InvalidRule, path, message);
}

Multiset take(const Multiset& m, const Type& t, const char* what) {
  auto r = minus(m, t);
  if (!r) invalid({}, std::string(what) + ": " + print_type(t) + " is not in the antecedent");
  return *r;
}

constexpr std::array<std::pair<SRule, std::string_view>, 7> kRules{{
    {SRule::Asm, "ASM"},
    {SRule::Cut, "CUT"},
    {SRule::Brk, "BRK"},
    {SRule::ArrR, "ARRR"},
    {SRule::ArrL, "ARRL"},
    {SRule::TensR, "TENSR"},
    {SRule::TensL, "TENSL"},
}};

std::size_t arity(SRule r) {
  switch (r) {
    case SRule::Asm: return 0;
    case SRule::ArrR:
    case SRule::TensL: return 1;
    default: return 2;
  }
}

bool has_formula(SRule r) { return r == SRule::Cut || r == SRule::Brk || r == SRule::ArrL || r == SRule::TensL; }

// Expected conclusion of `d` computed from its premises, or a reason it has none.
Sequent expected_conclusion(const SDerivation& d, const Path& path) {
  const auto& ps = d.premises;
  if (ps.size() != arity(d.rule))
    invalid(path, std::string(srule_name(d.rule)) + " needs " + std::to_string(arity(d.rule)) + " premises, has " +
                      std::to_string(ps.size()));
  if (has_formula(d.rule) && !d.formula) invalid(path, std::string(srule_name(d.rule)) + " needs a formula");
  const Sequent& c = d.conclusion;
  switch (d.rule) {
    case SRule::Asm:
      if (!contains(c.antecedent(), c.succedent()))
        invalid(path, "ASM: " + print_type(c.succedent()) + " is not among the assumptions");
      return c;
    case SRule::Cut: {
      const Type& a = *d.formula;
      if (!(ps[0].conclusion.succedent() == a))
        invalid(path, "CUT: left premise proves " + print_type(ps[0].conclusion.succedent()) + ", cut formula is " +
                          print_type(a));
      auto delta = minus(ps[1].conclusion.antecedent(), a);
      if (!delta) invalid(path, "CUT: cut formula " + print_type(a) + " is not assumed by the right premise");
      return Sequent(plus(ps[0].conclusion.antecedent(), *delta), ps[1].conclusion.succedent());
    }
    case SRule::Brk: {
      auto [k, s] = ks_types(ps[0].conclusion.succedent(), *d.formula);
      auto delta = minus(ps[1].conclusion.antecedent(), k);
      if (delta) delta = minus(*delta, s);
      if (!delta)
        invalid(path, "BRK: right premise must assume " + print_type(k) + " and " + print_type(s));
      return Sequent(plus(ps[0].conclusion.antecedent(), *delta), ps[1].conclusion.succedent());
    }
    case SRule::ArrR: {
      if (!c.succedent().is_arrow()) invalid(path, "ARRR: conclusion is not an implication");
      const Type& a = c.succedent().dom();
      if (!(ps[0].conclusion.succedent() == c.succedent().cod()))
        invalid(path, "ARRR: premise proves " + print_type(ps[0].conclusion.succedent()));
      auto gamma = minus(ps[0].conclusion.antecedent(), a);
      if (!gamma) invalid(path, "ARRR: premise does not assume " + print_type(a));
      return Sequent(*gamma, c.succedent());
    }
    case SRule::ArrL: {
      const Type& p = *d.formula;
      if (!p.is_arrow()) invalid(path, "ARRL: principal formula is not an implication");
      if (!(ps[0].conclusion.succedent() == p.dom()))
        invalid(path, "ARRL: left premise proves " + print_type(ps[0].conclusion.succedent()) + ", expected " +
                          print_type(p.dom()));
      auto delta = minus(ps[1].conclusion.antecedent(), p.cod());
      if (!delta) invalid(path, "ARRL: right premise does not assume " + print_type(p.cod()));
      return Sequent(plus(plus(ps[0].conclusion.antecedent(), *delta), {p}), ps[1].conclusion.succedent());
    }
    case SRule::TensR:
      return Sequent(plus(ps[0].conclusion.antecedent(), ps[1].conclusion.antecedent()),
                     Type::tensor(ps[0].conclusion.succedent(), ps[1].conclusion.succedent()));
    case SRule::TensL: {
      const Type& p = *d.formula;
      if (!p.is_tensor()) invalid(path, "TENSL: principal formula is not a tensor");
      auto gamma = minus(ps[0].conclusion.antecedent(), p.left());
      if (gamma) gamma = minus(*gamma, p.right());
      if (!gamma)
        invalid(path, "TENSL: premise must assume " + print_type(p.left()) + " and " + print_type(p.right()));
      return Sequent(plus(*gamma, {p}), ps[0].conclusion.succedent());
    }
  }
  invalid(path, "unknown rule");
}

void check_node(const SDerivation& d, Path& path) {
  Sequent expected = expected_conclusion(d, path);
  if (!(expected == d.conclusion))
    invalid(path, std::string(srule_name(d.rule)) + ": conclusion " + print_sequent(d.conclusion) +
                      " does not follow; expected " + print_sequent(expected));
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    check_node(d.premises[i], path);
    path.pop_back();
  }
}

SDerivation node(SRule rule, Sequent conclusion, std::vector<SDerivation> premises,
                 std::optional<Type> formula = std::nullopt) {
  return SDerivation{rule, std::move(conclusion), std::move(premises), std::move(formula)};
}

// ---- natural deduction to sequents ----

using NamedContext = std::vector<std::pair<std::string, Type>>;

Multiset types_of(const NamedContext& ctx) {
  Multiset out;
  for (auto& [_, t] : ctx) out.push_back(t);
  return out;
}

// Splits ctx into the entries named in `names` and the rest.
std::pair<NamedContext, NamedContext> split(const NamedContext& ctx, const std::set<std::string>& names) {
  NamedContext in, out;
  for (auto& e : ctx) (names.contains(e.first) ? in : out).push_back(e);
  return {in, out};
}

NamedContext extend(NamedContext ctx, std::initializer_list<std::pair<std::string, Type>> more) {
  for (auto& e : more) ctx.push_back(e);
  return ctx;
}

SDerivation from_term(const Term& t, const NamedContext& ctx) {
  switch (t.kind()) {
    case TermKind::Var: {
      return make_asm(types_of(split(ctx, {t.name()}).second), t.type());
    }
    case TermKind::Lam:
      return make_arr_r(from_term(t.body(), extend(ctx, {{t.binder(), t.binder_type()}})), t.binder_type());
    case TermKind::Pair: {
      auto [left, right] = split(ctx, free_names(t.first()));
      return make_tens_r(from_term(t.first(), left), from_term(t.second(), right));
    }
    case TermKind::App: {
      Type fun_type = type_of(t.fun());
      auto [arg_ctx, others] = split(ctx, free_names(t.arg()));
      if (t.fun().is(TermKind::Var)) {
        NamedContext rest = split(others, {t.fun().name()}).second;
        return make_arr_l(from_term(t.arg(), arg_ctx), make_asm(types_of(rest), fun_type.cod()), fun_type.cod());
      }
      auto [fun_ctx, rest] = split(others, free_names(t.fun()));
      SDerivation use = make_arr_l(from_term(t.arg(), arg_ctx), make_asm(types_of(rest), fun_type.cod()), fun_type.cod());
      return make_cut(from_term(t.fun(), fun_ctx), std::move(use));
    }
    case TermKind::Let: {
      const Term& s = t.scrutinee();
      if (s.is(TermKind::Var)) {
        NamedContext rest = split(ctx, {s.name()}).second;
        return make_tens_l(from_term(t.body(), extend(rest, {{t.x(), t.x_type()}, {t.y(), t.y_type()}})), t.x_type(),
                           t.y_type());
      }
      auto [s_ctx, rest] = split(ctx, free_names(s));
      SDerivation body =
          make_tens_l(from_term(t.body(), extend(rest, {{t.x(), t.x_type()}, {t.y(), t.y_type()}})), t.x_type(),
                      t.y_type());
      return make_cut(from_term(s, s_ctx), std::move(body));
    }
    case TermKind::Break: {
      const Term& s = t.scrutinee();
      auto [k, st] = ks_types(type_of(s), t.residue());
      auto [s_ctx, rest] = split(ctx, free_names(s));
      return make_brk(from_term(s, s_ctx), from_term(t.body(), extend(rest, {{t.phi(), k}, {t.f(), st}})), t.residue());
    }
  }
  throw Error("unknown term kind");
}

// ---- sequents to terms ----

class TermBuilder {
public:
  Term run(const SDerivation& d) {
    NamedContext names;
    for (std::size_t i = 0; i < d.conclusion.antecedent().size(); ++i)
      names.emplace_back("h" + std::to_string(i), d.conclusion.antecedent()[i]);
    return canonicalize(go(d, names));
  }

private:
  std::string fresh() { return "v" + std::to_string(counter_++); }

  static std::pair<std::string, NamedContext> pick(NamedContext names, const Type& t) {
    for (auto it = names.begin(); it != names.end(); ++it) {
      if (it->second == t) {
        std::string n = it->first;
        names.erase(it);
        return {n, names};
      }
    }
    invalid({}, "no assumption of type " + print_type(t));
  }

  // Splits `names` into entries matching the multiset `wanted` and the rest.
  static std::pair<NamedContext, NamedContext> take_all(NamedContext names, const Multiset& wanted) {
    NamedContext got;
    for (const Type& t : wanted) {
      auto [n, rest] = pick(names, t);
      got.emplace_back(n, t);
      names = std::move(rest);
    }
    return {got, names};
  }

  Term go(const SDerivation& d, const NamedContext& names) {
    const auto& ps = d.premises;
    switch (d.rule) {
      case SRule::Asm: {
        auto [n, _] = pick(names, d.conclusion.succedent());
        return Term::var(n, d.conclusion.succedent());
      }
      case SRule::ArrR: {
        const Type& a = d.conclusion.succedent().dom();
        std::string x = fresh();
        return Term::lam(x, a, go(ps[0], extend(names, {{x, a}})));
      }
      case SRule::TensR: {
        auto [left, right] = take_all(names, ps[0].conclusion.antecedent());
        return Term::pair(go(ps[0], left), go(ps[1], right));
      }
      case SRule::TensL: {
        const Type& p = *d.formula;
        auto [n, rest] = pick(names, p);
        std::string x = fresh(), y = fresh();
        return Term::let(x, p.left(), y, p.right(), Term::var(n, p),
                         go(ps[0], extend(rest, {{x, p.left()}, {y, p.right()}})));
      }
      case SRule::ArrL: {
        const Type& p = *d.formula;
        auto [h, rest] = pick(names, p);
        auto [left, right] = take_all(rest, ps[0].conclusion.antecedent());
        Term a = go(ps[0], left);
        std::string y = fresh();
        Term c = go(ps[1], extend(right, {{y, p.cod()}}));
        return substitute(c, {{y, Term::app(Term::var(h, p), a)}});
      }
      case SRule::Cut: {
        auto [left, right] = take_all(names, ps[0].conclusion.antecedent());
        Term a = go(ps[0], left);
        std::string x = fresh();
        Term c = go(ps[1], extend(right, {{x, *d.formula}}));
        return substitute(c, {{x, a}});
      }
      case SRule::Brk: {
        auto [left, right] = take_all(names, ps[0].conclusion.antecedent());
        Term a = go(ps[0], left);
        auto [k, s] = ks_types(ps[0].conclusion.succedent(), *d.formula);
        std::string phi = fresh(), f = fresh();
        return Term::brk(a, phi, f, *d.formula, go(ps[1], extend(right, {{phi, k}, {f, s}})));
      }
    }
    throw Error("unknown rule");
  }

  std::size_t counter_ = 0;
};

// ---- cut elimination ----

class CutEliminator {
public:
  explicit CutEliminator(std::size_t budget) : budget_(budget) {}

  SDerivation run(const SDerivation& d) {
    std::vector<SDerivation> premises;
    for (auto& p : d.premises) premises.push_back(run(p));
    if (d.rule == SRule::Cut) return reduce(premises[0], premises[1]);
    SDerivation out = d;
    out.premises = std::move(premises);
    return out;
  }

private:
  void spend() {
    if (++spent_ > budget_)
      throw DerivationError(DerivationError::Kind::BudgetExceeded, {},
                            "cut elimination exceeded " + std::to_string(budget_) + " steps");
  }

  // d1 : Gamma |- A and d2 : Delta, A |- C, both cut-free. Returns a cut-free
  // derivation of Gamma, Delta |- C.
  SDerivation reduce(const SDerivation& d1, const SDerivation& d2) {
    spend();
    const Type& a = d1.conclusion.succedent();
    const Multiset& gamma = d1.conclusion.antecedent();
    Multiset delta = take(d2.conclusion.antecedent(), a, "cut");

    if (d1.rule == SRule::Asm) return weaken(d2, take(gamma, a, "cut"));
    if (d2.rule == SRule::Asm) {
      const Type& c = d2.conclusion.succedent();
      if (c == a) return weaken(d1, delta);
      return make_asm(take(plus(gamma, delta), c, "cut"), c);
    }

    const auto& p = d1.premises;
    switch (d1.rule) {
      case SRule::ArrL: return make_arr_l(p[0], reduce(p[1], d2), d1.formula->cod());
      case SRule::TensL: return make_tens_l(reduce(p[0], d2), d1.formula->left(), d1.formula->right());
      case SRule::Brk: return make_brk(p[0], reduce(p[1], d2), *d1.formula);
      default: break;
    }

    const auto& q = d2.premises;
    if (d2.rule == SRule::ArrL && *d2.formula == a) {
      // d1 = ArrR(Gamma, X |- Y), d2 = ArrL(Delta1 |- X ; Delta2, Y |- C)
      return reduce(reduce(q[0], p[0]), q[1]);
    }
    if (d2.rule == SRule::TensL && *d2.formula == a) {
      // d1 = TensR(Gamma1 |- X ; Gamma2 |- Y), d2 = TensL(Delta, X, Y |- C)
      return reduce(p[1], reduce(p[0], q[0]));
    }

    auto left_has = [&] { return contains(q[0].conclusion.antecedent(), a); };
    switch (d2.rule) {
      case SRule::ArrR: return make_arr_r(reduce(d1, q[0]), d2.conclusion.succedent().dom());
      case SRule::TensL: return make_tens_l(reduce(d1, q[0]), d2.formula->left(), d2.formula->right());
      case SRule::ArrL:
        if (left_has()) return make_arr_l(reduce(d1, q[0]), q[1], d2.formula->cod());
        return make_arr_l(q[0], reduce(d1, q[1]), d2.formula->cod());
      case SRule::TensR:
        if (left_has()) return make_tens_r(reduce(d1, q[0]), q[1]);
        return make_tens_r(q[0], reduce(d1, q[1]));
      case SRule::Brk:
        if (left_has()) return make_brk(reduce(d1, q[0]), q[1], *d2.formula);
        return make_brk(q[0], reduce(d1, q[1]), *d2.formula);
      default: break;
    }
    throw DerivationError(DerivationError::Kind::InvalidRule, {}, "cut elimination met an unexpected cut");
  }

  std::size_t budget_;
  std::size_t spent_ = 0;
};

// ---- bounded search ----

class Searcher {
public:
  std::optional<SDerivation> prove(const Sequent& goal, std::size_t depth) {
    if (depth == 0) return std::nullopt;
    std::string key = print_sequent(goal) + "#" + std::to_string(depth);
    if (failed_.contains(key)) return std::nullopt;
    auto r = attempt(goal, depth);
    if (!r) failed_.insert(key);
    return r;
  }

private:
  // Distinct ways to split a multiset in two.
  static std::vector<std::pair<Multiset, Multiset>> splits(const Multiset& m) {
    std::vector<std::pair<Multiset, Multiset>> out;
    std::set<std::pair<Multiset, Multiset>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m.size()); ++mask) {
      Multiset a, b;
      for (std::size_t i = 0; i < m.size(); ++i) ((mask >> i) & 1 ? a : b).push_back(m[i]);
      a = sorted(a);
      b = sorted(b);
      if (seen.emplace(a, b).second) out.emplace_back(a, b);
    }
    return out;
  }

  std::optional<SDerivation> attempt(const Sequent& goal, std::size_t depth) {
    const Multiset& ant = goal.antecedent();
    const Type& c = goal.succedent();
    if (contains(ant, c)) return make_asm(take(ant, c, "search"), c);

    std::set<std::string> tried;
    for (const Type& p : ant) {
      if (!p.is_tensor() || !tried.insert(print_type(p)).second) continue;
      Multiset rest = plus(take(ant, p, "search"), {p.left(), p.right()});
      if (auto d = prove(Sequent(rest, c), depth - 1)) return make_tens_l(*d, p.left(), p.right());
    }
    if (c.is_arrow()) {
      if (auto d = prove(Sequent(plus(ant, {c.dom()}), c.cod()), depth - 1)) return make_arr_r(*d, c.dom());
    }
    if (c.is_tensor()) {
      for (auto& [l, r] : splits(ant)) {
        auto dl = prove(Sequent(l, c.left()), depth - 1);
        if (!dl) continue;
        if (auto dr = prove(Sequent(r, c.right()), depth - 1)) return make_tens_r(*dl, *dr);
      }
    }
    tried.clear();
    for (const Type& p : ant) {
      if (!p.is_arrow() || !tried.insert(print_type(p)).second) continue;
      Multiset rest = take(ant, p, "search");
      for (auto& [l, r] : splits(rest)) {
        auto dl = prove(Sequent(l, p.dom()), depth - 1);
        if (!dl) continue;
        if (auto dr = prove(Sequent(plus(r, {p.cod()}), c), depth - 1)) return make_arr_l(*dl, *dr, p.cod());
      }
    }
    return std::nullopt;
  }

  std::set<std::string> failed_;
};

// ---- text format ----

void print_into(const SDerivation& d, std::size_t indent, std::string& out) {
  out += std::string(indent, ' ') + "(" + std::string(srule_name(d.rule));
  if (d.formula) out += " [" + print_type(*d.formula) + "]";
  out += " " + print_sequent(d.conclusion);
  for (auto& p : d.premises) {
    out += "\n";
    print_into(p, indent + 2, out);
  }
  out += ")";
}

using detail::Tok;

SDerivation parse_node(detail::TokenStream& ts) {
  ts.expect(Tok::LParen);
  detail::Token name = ts.expect(Tok::Ident);
  auto rule = parse_srule(name.text);
  if (!rule) throw ParseError("unknown rule " + name.text, name.span, {"ASM", "CUT", "BRK", "ARRR", "ARRL", "TENSR", "TENSL"});
  std::optional<Type> formula;
  if (ts.accept(Tok::LBracket)) {
    formula = ts.parse_type();
    ts.expect(Tok::RBracket);
  }
  Multiset ant;
  if (!ts.at(Tok::Turnstile)) {
    ant.push_back(ts.parse_type());
    while (ts.accept(Tok::Comma)) ant.push_back(ts.parse_type());
  }
  ts.expect(Tok::Turnstile);
  Type succ = ts.parse_type();
  std::vector<SDerivation> premises;
  while (ts.at(Tok::LParen)) premises.push_back(parse_node(ts));
  ts.expect(Tok::RParen);
  return node(*rule, Sequent(std::move(ant), std::move(succ)), std::move(premises), std::move(formula));
}

std::size_t count_into(const SDerivation& d, const std::optional<SRule>& r) {
  std::size_t n = (!r || d.rule == *r) ? 1 : 0;
  for (auto& p : d.premises) n += count_into(p, r);
  return n;
}

}  // namespace

Sequent::Sequent(std::vector<Type> antecedent, Type succedent)
    : antecedent_(sorted(std::move(antecedent))), succedent_(std::move(succedent)) {}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent().size(); ++i) {
    if (i) out += ", ";
    out += print_type(s.antecedent()[i]);
  }
  out += out.empty() ? "|- " : " |- ";
  out += print_type(s.succedent());
  return out;
}

std::string_view srule_name(SRule r) {
  for (auto& [rule, name] : kRules)
    if (rule == r) return name;
  return "?";
}

std::optional<SRule> parse_srule(std::string_view text) {
  for (auto& [rule, name] : kRules)
    if (name == text) return rule;
  return std::nullopt;
}

SDerivation make_asm(std::vector<Type> context, Type a) {
  context.push_back(a);
  return node(SRule::Asm, Sequent(std::move(context), std::move(a)), {});
}

SDerivation make_cut(SDerivation left, SDerivation right) {
  Type a = left.conclusion.succedent();
  Multiset delta = take(right.conclusion.antecedent(), a, "CUT");
  Sequent c(plus(left.conclusion.antecedent(), delta), right.conclusion.succedent());
  return node(SRule::Cut, std::move(c), {std::move(left), std::move(right)}, a);
}

SDerivation make_brk(SDerivation left, SDerivation right, Type residue) {
  auto [k, s] = ks_types(left.conclusion.succedent(), residue);
  Multiset delta = take(take(right.conclusion.antecedent(), k, "BRK"), s, "BRK");
  Sequent c(plus(left.conclusion.antecedent(), delta), right.conclusion.succedent());
  return node(SRule::Brk, std::move(c), {std::move(left), std::move(right)}, std::move(residue));
}

SDerivation make_arr_r(SDerivation premise, const Type& a) {
  Sequent c(take(premise.conclusion.antecedent(), a, "ARRR"), Type::arrow(a, premise.conclusion.succedent()));
  return node(SRule::ArrR, std::move(c), {std::move(premise)});
}

SDerivation make_arr_l(SDerivation left, SDerivation right, const Type& b) {
  Type p = Type::arrow(left.conclusion.succedent(), b);
  Multiset delta = take(right.conclusion.antecedent(), b, "ARRL");
  Sequent c(plus(plus(left.conclusion.antecedent(), delta), {p}), right.conclusion.succedent());
  return node(SRule::ArrL, std::move(c), {std::move(left), std::move(right)}, p);
}

SDerivation make_tens_r(SDerivation left, SDerivation right) {
  Sequent c(plus(left.conclusion.antecedent(), right.conclusion.antecedent()),
            Type::tensor(left.conclusion.succedent(), right.conclusion.succedent()));
  return node(SRule::TensR, std::move(c), {std::move(left), std::move(right)});
}

SDerivation make_tens_l(SDerivation premise, const Type& a, const Type& b) {
  Type p = Type::tensor(a, b);
  Multiset gamma = take(take(premise.conclusion.antecedent(), a, "TENSL"), b, "TENSL");
  Sequent c(plus(gamma, {p}), premise.conclusion.succedent());
  return node(SRule::TensL, std::move(c), {std::move(premise)}, p);
}

Sequent check_derivation(const SDerivation& d) {
  Path path;
  check_node(d, path);
  return d.conclusion;
}

SDerivation weaken(const SDerivation& d, const std::vector<Type>& extra) {
  if (extra.empty()) return d;
  SDerivation out = d;
  out.conclusion = Sequent(plus(d.conclusion.antecedent(), extra), d.conclusion.succedent());
  if (!out.premises.empty()) out.premises[0] = weaken(d.premises[0], extra);
  return out;
}

std::size_t node_count(const SDerivation& d) { return count_into(d, std::nullopt); }

std::size_t count_rule(const SDerivation& d, SRule r) { return count_into(d, r); }

std::size_t height(const SDerivation& d) {
  std::size_t h = 0;
  for (auto& p : d.premises) h = std::max(h, height(p));
  return h + 1;
}

SDerivation nd_to_sequent(const Term& t0) {
  Term t = canonicalize(t0);
  check(t);
  NamedContext ctx;
  for (auto& [name, type] : free_vars(t)) ctx.emplace_back(name, type);
  return from_term(t, ctx);
}

Term sequent_to_term(const SDerivation& d) {
  check_derivation(d);
  return TermBuilder().run(d);
}

SDerivation eliminate_cuts(const SDerivation& d, std::size_t node_budget) {
  check_derivation(d);
  return CutEliminator(node_budget).run(d);
}

SDerivation brk_via_cut_empty(const SDerivation& d_a, const SDerivation& d_c, std::optional<Type> residue) {
  const Type& a = d_a.conclusion.succedent();
  if (!d_a.conclusion.antecedent().empty())
    throw DerivationError(DerivationError::Kind::PreconditionViolation, {},
                          "the derivation of " + print_type(a) + " has assumptions");
  const Multiset& ant = d_c.conclusion.antecedent();
  if (!residue) {
    // K_B A = (A -> B) -> B together with S_B A = B -> A
    for (const Type& k : ant) {
      if (k.is_arrow() && k.dom().is_arrow() && k.dom().dom() == a && k.dom().cod() == k.cod() &&
          contains(ant, s_type(a, k.cod()))) {
        residue = k.cod();
        break;
      }
    }
  }
  if (!residue || !contains(ant, k_type(a, *residue)) || !contains(ant, s_type(a, *residue)))
    throw DerivationError(DerivationError::Kind::PreconditionViolation, {},
                          "the right derivation does not assume K_B A and S_B A for A = " + print_type(a));
  const Type& b = *residue;
  // |- B -> A
  SDerivation s = make_arr_r(weaken(d_a, {b}), b);
  // |- (A -> B) -> B
  SDerivation k = make_arr_r(make_arr_l(d_a, make_asm({}, b), b), Type::arrow(a, b));
  return make_cut(std::move(s), make_cut(std::move(k), d_c));
}

SDerivation brk_via_cut_superfluous(const SDerivation& d_a, const SDerivation& d_c, Superfluous which,
                                    const Type& residue) {
  const Type& a = d_a.conclusion.succedent();
  const Type k = k_type(a, residue), s = s_type(a, residue);
  const Multiset& ant = d_c.conclusion.antecedent();
  const Type& needed = which == Superfluous::K ? s : k;
  const Type& absent = which == Superfluous::K ? k : s;
  if (!contains(ant, needed))
    throw DerivationError(DerivationError::Kind::PreconditionViolation, {},
                          "the right derivation does not assume " + print_type(needed));
  if (contains(ant, absent))
    throw DerivationError(DerivationError::Kind::PreconditionViolation, {},
                          "the right derivation also assumes " + print_type(absent));
  if (which == Superfluous::K) return make_cut(make_arr_r(weaken(d_a, {residue}), residue), d_c);
  SDerivation kd = make_arr_r(make_arr_l(d_a, make_asm({}, residue), residue), Type::arrow(a, residue));
  return make_cut(std::move(kd), d_c);
}

std::optional<SDerivation> search_cut_free(const Sequent& goal, std::size_t max_depth) {
  return Searcher().prove(goal, max_depth);
}

std::string print_derivation(const SDerivation& d) {
  std::string out;
  print_into(d, 0, out);
  return out;
}

SDerivation parse_derivation(std::string_view text) {
  detail::TokenStream ts(detail::tokenize(text));
  SDerivation d = parse_node(ts);
  if (!ts.at(Tok::End)) ts.fail("unexpected " + detail::describe(ts.peek().kind) + " after derivation");
  return d;
}

}  // namespace bcalc
