#include "bcalc/reduction.hpp"

#include <array>
#include <ostream>

#include "bcalc/error.hpp"
#include "bcalc/print.hpp"
#include "bcalc/syntax.hpp"

namespace bcalc {

namespace {

constexpr std::array<std::pair<RuleName, std::string_view>, 8> kRuleNames{{
    {RuleName::Beta, "beta"},
    {RuleName::LConv, "l-conv"},
    {RuleName::BConv, "b-conv"},
    {RuleName::ApLConv, "ap-l-conv"},
    {RuleName::LLConv, "l-l-conv"},
    {RuleName::ApBConv, "ap-b-conv"},
    {RuleName::LBConv, "l-b-conv"},
    {RuleName::BLConv, "b-l-conv"},
}};

bool body_mentions(const Term& t, const std::string& a, const std::string& b) {
  return occurs_free(t.body(), a) || occurs_free(t.body(), b);
}

bool matches(const Term& t, RuleName rule, const ReductionOptions& options) {
  switch (rule) {
    case RuleName::Beta: return t.is(TermKind::App) && t.fun().is(TermKind::Lam);
    case RuleName::LConv: return t.is(TermKind::Let) && t.scrutinee().is(TermKind::Pair);
    case RuleName::BConv:
      return t.is(TermKind::Break) && (!occurs_free(t.body(), t.phi()) || !occurs_free(t.body(), t.f()) ||
                                       free_names(t.scrutinee()).empty());
    case RuleName::ApLConv: return t.is(TermKind::App) && t.fun().is(TermKind::Let);
    case RuleName::LLConv: {
      if (!t.is(TermKind::Let) || !t.scrutinee().is(TermKind::Let)) return false;
      const Term& inner = t.scrutinee();
      return !body_mentions(t, inner.x(), inner.y());
    }
    case RuleName::ApBConv: return t.is(TermKind::App) && t.fun().is(TermKind::Break);
    case RuleName::LBConv: {
      if (!t.is(TermKind::Let) || !t.scrutinee().is(TermKind::Break)) return false;
      const Term& inner = t.scrutinee();
      return !body_mentions(t, inner.phi(), inner.f());
    }
    case RuleName::BLConv: {
      if (!options.experimental_blconv) return false;
      if (!t.is(TermKind::Break) || !t.scrutinee().is(TermKind::Let)) return false;
      const Term& inner = t.scrutinee();
      return !body_mentions(t, inner.x(), inner.y());
    }
  }
  return false;
}

void collect(const Term& t, Path& path, const ReductionOptions& options, std::vector<Redex>& out) {
  for (auto& [rule, _] : kRuleNames)
    if (matches(t, rule, options)) out.push_back({path, rule});
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    collect(t.child(i), path, options, out);
    path.pop_back();
  }
}

Term contract(const Term& t, RuleName rule) {
  switch (rule) {
    case RuleName::Beta: return substitute(t.fun().body(), {{t.fun().binder(), t.arg()}});
    case RuleName::LConv: {
      const Term& p = t.scrutinee();
      return substitute(t.body(), {{t.x(), p.first()}, {t.y(), p.second()}});
    }
    case RuleName::BConv: {
      const Term& s = t.scrutinee();
      Type a = type_of(s);
      const Type& b = t.residue();
      std::set<std::string> avoid = free_names(s);
      std::string p = fresh_name("p", avoid);
      std::string ignored = fresh_name("_", avoid);
      Type p_type = Type::arrow(a, b);
      Term k = Term::lam(p, p_type, Term::app(Term::var(p, p_type), s));
      Term c = Term::lam(ignored, b, s);
      return substitute(t.body(), {{t.phi(), k}, {t.f(), c}});
    }
    case RuleName::ApLConv: {
      const Term& l = t.fun();
      return Term::let(l.x(), l.x_type(), l.y(), l.y_type(), l.scrutinee(), Term::app(l.body(), t.arg()));
    }
    case RuleName::LLConv: {
      const Term& in = t.scrutinee();
      return Term::let(in.x(), in.x_type(), in.y(), in.y_type(), in.scrutinee(),
                       Term::let(t.x(), t.x_type(), t.y(), t.y_type(), in.body(), t.body()));
    }
    case RuleName::ApBConv: {
      const Term& b = t.fun();
      return Term::brk(b.scrutinee(), b.phi(), b.f(), b.residue(), Term::app(b.body(), t.arg()));
    }
    case RuleName::LBConv: {
      const Term& in = t.scrutinee();
      return Term::brk(in.scrutinee(), in.phi(), in.f(), in.residue(),
                       Term::let(t.x(), t.x_type(), t.y(), t.y_type(), in.body(), t.body()));
    }
    case RuleName::BLConv: {
      const Term& in = t.scrutinee();
      return Term::let(in.x(), in.x_type(), in.y(), in.y_type(), in.scrutinee(),
                       Term::brk(in.body(), t.phi(), t.f(), t.residue(), t.body()));
    }
  }
  throw ReductionError(ReductionError::Kind::InvalidRedex, "unknown rule");
}

const Term* locate(const Term& t, const Path& path) {
  const Term* cur = &t;
  for (std::size_t i : path) {
    if (i >= cur->arity()) return nullptr;
    cur = &cur->child(i);
  }
  return cur;
}

void tally(const Term& t, Measure& m) {
  if (t.is(TermKind::Let) || t.is(TermKind::Break)) {
    m.first_arg_load += term_size(t.scrutinee());
    m.second_arg_type_load += type_size(type_of(t.body()));
  }
  for (std::size_t i = 0; i < t.arity(); ++i) tally(t.child(i), m);
}

}  // namespace

std::string_view rule_name(RuleName r) {
  for (auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

std::optional<RuleName> parse_rule_name(std::string_view text) {
  for (auto& [rule, name] : kRuleNames)
    if (name == text) return rule;
  return std::nullopt;
}

bool is_standard(RuleName r) { return r == RuleName::Beta || r == RuleName::LConv || r == RuleName::BConv; }

bool is_permuting(RuleName r) { return !is_standard(r); }

std::vector<Redex> find_redexes(const Term& t, ReductionOptions options) {
  std::vector<Redex> out;
  Path path;
  collect(canonicalize(t), path, options, out);
  return out;
}

Term apply_step(const Term& t, const Redex& r, ReductionOptions options) {
  Term c = canonicalize(t);
  const Term* at = locate(c, r.position);
  if (at == nullptr || !matches(*at, r.rule, options))
    throw ReductionError(ReductionError::Kind::InvalidRedex,
                         std::string(rule_name(r.rule)) + " does not match at " + format_path(r.position));
  return canonicalize(replace_at(c, r.position, contract(*at, r.rule)));
}

bool is_silent(const Term& t, const Redex& r) {
  const Term* at = locate(t, r.position);
  if (at == nullptr || !matches(*at, r.rule, {.experimental_blconv = true}))
    throw ReductionError(ReductionError::Kind::InvalidRedex,
                         std::string(rule_name(r.rule)) + " does not match at " + format_path(r.position));
  switch (r.rule) {
    case RuleName::Beta: return false;
    case RuleName::LConv: return !body_mentions(*at, at->x(), at->y());
    case RuleName::BConv: return !body_mentions(*at, at->phi(), at->f());
    default:
      throw ReductionError(ReductionError::Kind::Unclassified,
                           std::string(rule_name(r.rule)) + " is a permuting conversion; silence is undefined");
  }
}

Measure measure(const Term& t) {
  Measure m;
  m.size = term_size(t);
  tally(t, m);
  return m;
}

NormalizeResult normalize(const Term& t, std::size_t max_steps, Strategy strategy, ReductionOptions options) {
  NormalizeResult result{canonicalize(t), {}};
  for (;;) {
    auto redexes = find_redexes(result.normal_form, options);
    if (redexes.empty()) return result;
    if (result.trace.size() >= max_steps)
      throw ReductionError(ReductionError::Kind::StepBudgetExceeded,
                           "no normal form within " + std::to_string(max_steps) + " steps");
    const Redex& r = strategy == Strategy::First ? redexes.front() : redexes.back();
    Term next = apply_step(result.normal_form, r, options);
    result.trace.push_back({r.rule, r.position, result.normal_form, next});
    result.normal_form = next;
  }
}

std::vector<Term> reducts_one_step(const Term& t, ReductionOptions options) {
  std::vector<Term> out;
  for (const Redex& r : find_redexes(t, options)) {
    Term next = apply_step(t, r, options);
    bool seen = false;
    for (const Term& o : out) seen = seen || alpha_eq(o, next);
    if (!seen) out.push_back(next);
  }
  return out;
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& s = trace[i];
    out << (i + 1) << ' ' << rule_name(s.rule) << ' ' << format_path(s.position) << ' ' << print_term(s.after)
        << '\n';
  }
}

}  // namespace bcalc
