#include "doctest.h"

#include <set>
#include <sstream>

#include "bcalc/catalog.hpp"
#include "bcalc/error.hpp"
#include "bcalc/parse.hpp"
#include "bcalc/print.hpp"
#include "bcalc/reduction.hpp"
#include "bcalc/syntax.hpp"
#include "bcalc/typing.hpp"
#include "support/gen.hpp"

using namespace bcalc;

namespace {

Type A() { return Type::atom("A"); }
Type B() { return Type::atom("B"); }

std::vector<std::string> rules_of(const Trace& trace) {
  std::vector<std::string> out;
  for (auto& s : trace) out.emplace_back(rule_name(s.rule));
  return out;
}

// Every rule sequence that takes `t` to normal form.
void all_paths(const Term& t, std::vector<std::string>& prefix, std::set<std::vector<std::string>>& out) {
  auto rs = find_redexes(t);
  if (rs.empty()) {
    out.insert(prefix);
    return;
  }
  for (auto& r : rs) {
    prefix.emplace_back(rule_name(r.rule));
    all_paths(apply_step(t, r), prefix, out);
    prefix.pop_back();
  }
}

// Terms reachable from `t` in at most `depth` steps.
std::vector<Term> within(const Term& t, int depth) {
  std::vector<Term> seen{t}, frontier{t};
  for (int d = 0; d < depth; ++d) {
    std::vector<Term> next;
    for (auto& u : frontier)
      for (auto& w : reducts_one_step(u))
        if (std::none_of(seen.begin(), seen.end(), [&](const Term& s) { return alpha_eq(s, w); })) {
          seen.push_back(w);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("redex discovery") {
  auto rs = find_redexes(parse_term("(\\x:A. x) (y : A)"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0] == Redex{{}, RuleName::Beta});

  rs = find_redexes(parse_term("(let <x:A, y:B> = <(t : A), (u : B)> in \\c:C. x) (r : C)"));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == Redex{{}, RuleName::ApLConv});
  CHECK(rs[1] == Redex{{0}, RuleName::LConv});

  // the closed scrutinee is itself an l-conv redex
  Term w = overlap_closed(A(), B());
  rs = find_redexes(w);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == Redex{{}, RuleName::BConv});
  CHECK(rs[1] == Redex{{0}, RuleName::LConv});
  rs = find_redexes(w, {.experimental_blconv = true});
  REQUIRE(rs.size() == 3);
  CHECK(rs[1] == Redex{{}, RuleName::BLConv});

  CHECK(find_redexes(identity_break(A())).empty());
  CHECK(find_redexes(divisibility_terms(A(), B()).t).empty());
}

TEST_CASE("side conditions") {
  // open scrutinee with both break variables used: no b-conv
  CHECK(find_redexes(parse_term("break (x : A) as <phi, f> @ B in <phi, f>")).empty());
  // closed scrutinee
  CHECK(find_redexes(parse_term("break (\\a:A. a) as <phi, f> @ B in <phi, f>")).size() == 1);
  // l-l-conv needs the inner binders absent from the outer body; canonical
  // renaming makes that hold whenever the shape matches
  auto rs = find_redexes(parse_term("let <v:A, w:B> = (let <x:A, y:B> = (p : A * B) in <x, y>) in <w, v>"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].rule == RuleName::LLConv);
}

TEST_CASE("contraction") {
  CHECK(alpha_eq(apply_step(parse_term("(\\x:A. x) (y : A)"), {{}, RuleName::Beta}), parse_term("(y : A)")));

  Term s = parse_term("\\c:B. c");
  Term t = Term::brk(s, "phi", "f", Type::arrow(B(), B()),
                     Term::app(Term::var("phi", k_type(Type::arrow(B(), B()), Type::arrow(B(), B()))),
                               Term::var("f", s_type(Type::arrow(B(), B()), Type::arrow(B(), B())))));
  Term r = apply_step(t, {{}, RuleName::BConv});
  CHECK(alpha_eq(r, parse_term("(\\p:(B -> B) -> B -> B. p (\\c:B. c)) (\\_:B -> B. \\c:B. c)")));

  Term ap = parse_term("(break (x : A) as <phi, f> @ B in \\c:C. <phi, f>) (s : C)");
  CHECK(alpha_eq(apply_step(ap, {{}, RuleName::ApBConv}),
                 parse_term("break (x : A) as <phi, f> @ B in (\\c:C. <phi, f>) (s : C)")));

  CHECK_THROWS_AS(apply_step(ap, {{}, RuleName::Beta}), ReductionError);
  CHECK_THROWS_AS(apply_step(ap, {{0}, RuleName::Beta}), ReductionError);
}

TEST_CASE("silent classification") {
  Term l = parse_term("let <x:A, y:B> = <(t : A), (u : B)> in (z : C)");
  CHECK(is_silent(l, {{}, RuleName::LConv}));
  Term b = parse_term("break (\\s:A. s) as <phi, f> @ A -> A in phi f");
  CHECK_FALSE(is_silent(b, {{}, RuleName::BConv}));
  Term v = parse_term("break (x' : A) as <phi, f> @ B in phi (g' : A -> B)");
  CHECK_FALSE(is_silent(v, {{}, RuleName::BConv}));
  Term p = parse_term("(let <x:A, y:B> = (p : A * B) in \\c:C. x) (r : C)");
  CHECK_THROWS_AS(is_silent(p, {{}, RuleName::ApLConv}), ReductionError);
}

TEST_CASE("measure") {
  CHECK(measure(parse_term("(x : A)")) == Measure{1, 0, 0});
  // (let <x,y> = t in s) r  ~>  let <x,y> = t in s r
  Term before = parse_term("(let <x:A, y:B> = (t : A * B) in \\c:C. <x, y>) (r : C)");
  Term after = apply_step(before, {{}, RuleName::ApLConv});
  Measure mb = measure(before), ma = measure(after);
  CHECK(term_size(before) == 8);
  CHECK(mb.size == ma.size);
  CHECK(mb.first_arg_load == ma.first_arg_load);
  CHECK(mb.second_arg_type_load == 5);
  CHECK(ma.second_arg_type_load == 3);
}

TEST_CASE("normalization") {
  Term x = parse_term("(x : A)");
  auto r = normalize(x);
  CHECK(r.trace.empty());
  CHECK(alpha_eq(r.normal_form, x));

  Term s = parse_term("\\a:A. \\b:B. <a, b>");
  Term applied = Term::app(identity_break(check(s)), s);
  CHECK(alpha_eq(normalize(applied).normal_form, s));

  Term u = divisibility_terms(A(), B()).u;
  auto n = normalize(u);
  CHECK(alpha_eq(n.normal_form, parse_term("\\x':A. \\g':A -> B. g' x'")));
  for (auto& step : n.trace) CHECK(check(step.after) == check(u));

  CHECK_THROWS_AS(normalize(u, 2), ReductionError);
}

TEST_CASE("divisibility chain over every reduction path") {
  std::set<std::vector<std::string>> paths;
  std::vector<std::string> prefix;
  all_paths(divisibility_terms(A(), B()).u, prefix, paths);
  auto first = rules_of(normalize(divisibility_terms(A(), B()).u).trace);
  CHECK(first == std::vector<std::string>{"beta", "ap-b-conv", "l-b-conv", "beta", "l-conv", "b-conv", "beta"});
  // no path has six steps or the six-rule order
  const std::vector<std::string> six{"beta", "l-b-conv", "l-conv", "b-conv", "beta", "beta"};
  CHECK(paths.count(six) == 0);
  for (auto& p : paths) CHECK(p.size() == 7);
}

TEST_CASE("trace format") {
  auto n = normalize(parse_term("(\\x:A. x) ((\\y:A. y) (z : A))"));
  std::ostringstream out;
  write_trace(out, n.trace);
  CHECK(out.str() == "1 beta . (\\y:A. y) (z : A)\n2 beta . (z : A)\n");
}

TEST_CASE("one-step reducts") {
  auto rs = reducts_one_step(parse_term("(let <x:A, y:B> = <(t : A), (u : B)> in \\c:C. x) (r : C)"));
  REQUIRE(rs.size() == 2);
  CHECK(alpha_eq(rs[0], parse_term("let <x:A, y:B> = <(t : A), (u : B)> in (\\c:C. x) (r : C)")));
  CHECK(alpha_eq(rs[1], parse_term("(\\c:C. (t : A)) (r : C)")));
  CHECK(reducts_one_step(identity_break(A())).empty());
}

TEST_CASE("closed overlap has one normal form even with the experimental rule") {
  Term w = overlap_closed(A(), B());
  ReductionOptions on{.experimental_blconv = true};
  auto rs = reducts_one_step(w, on);
  REQUIRE(rs.size() == 3);
  // the closed scrutinee reduces to a pair, so every side meets again
  for (auto& r : rs)
    CHECK(alpha_eq(normalize(r, 1000, Strategy::First, on).normal_form, normalize(w).normal_form));
  CHECK(alpha_eq(normalize(w).normal_form, normalize(w, 1000, Strategy::Last).normal_form));
}

TEST_CASE("open overlap") {
  Term w = overlap_open(A(), B());
  ReductionOptions on{.experimental_blconv = true};
  Term first = normalize(w, 1000, Strategy::First, on).normal_form;
  Term last = normalize(w, 1000, Strategy::Last, on).normal_form;
  CHECK_FALSE(alpha_eq(first, last));
  CHECK(check(first) == check(last));
  CHECK(alpha_eq(normalize(w).normal_form, normalize(w, 1000, Strategy::Last).normal_form));
}

TEST_CASE("critical pairs rejoin") {
  for (auto& [name, src] : gen::critical_pairs()) {
    INFO(name);
    Term w = parse_term(src);
    auto rs = reducts_one_step(w);
    REQUIRE(rs.size() >= 2);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        auto left = within(rs[i], 2), right = within(rs[j], 2);
        bool joined = std::any_of(left.begin(), left.end(), [&](const Term& a) {
          return std::any_of(right.begin(), right.end(), [&](const Term& b) { return alpha_eq(a, b); });
        });
        CHECK(joined);
      }
  }
}

TEST_CASE("reduction properties on random terms") {
  gen::Generator g(41);
  for (int i = 0; i < 200; ++i) {
    Term t = g.redex_term(40);
    Type ty = check(t);
    INFO(print_term(t));
    for (auto& r : find_redexes(t)) {
      Term u = apply_step(t, r);
      CHECK(check(u) == ty);
      if (is_permuting(r.rule) || ((r.rule == RuleName::LConv || r.rule == RuleName::BConv) && is_silent(t, r)))
        CHECK(measure(u) < measure(t));
    }
    Term n1 = normalize(t).normal_form;
    CHECK(alpha_eq(n1, normalize(t, 100000, Strategy::Last).normal_form));
    for (auto& u : reducts_one_step(t)) CHECK(alpha_eq(normalize(u).normal_form, n1));
  }
}

TEST_CASE("stability under substitution") {
  gen::Generator g(43);
  for (int i = 0; i < 150; ++i) {
    Term s = g.redex_term(30);
    auto fv = free_vars(s);
    Bindings sigma;
    for (auto& [name, ty] : fv)
      if (g.chance(60)) {
        if (auto c = g.closed_term(ty, 6)) sigma.emplace_back(name, normalize(*c).normal_form);
      }
    Term ss = substitute(s, sigma);
    for (auto& u : reducts_one_step(s)) {
      Term target = substitute(u, sigma);
      auto next = reducts_one_step(ss);
      bool found = std::any_of(next.begin(), next.end(), [&](const Term& w) { return alpha_eq(w, target); });
      INFO(print_term(s));
      CHECK(found);
    }
  }
}
