#include "doctest.h"

#include "bcalc/catalog.hpp"
#include "bcalc/error.hpp"
#include "bcalc/lambda_pair.hpp"
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

LTerm lv(const char* n) { return LTerm::var(n); }

// \x:a. \p:a -> b. p x  and  \x:a. \_:b. x, written out by hand
LTerm k0(const Type& a, const Type& b) {
  return LTerm::lam("x", a, LTerm::lam("p", Type::arrow(a, b), LTerm::app(lv("p"), lv("x"))));
}
LTerm k1(const Type& a, const Type& b) { return LTerm::lam("x", a, LTerm::lam("_", b, lv("x"))); }

std::map<std::string, Type> env_of(const Term& t) {
  auto fv = free_vars(t);
  return {fv.begin(), fv.end()};
}

}  // namespace

TEST_CASE("projections and beta") {
  LTerm pr = LTerm::proj0(LTerm::pair(lv("s"), lv("t")));
  auto r = l_step(pr);
  REQUIRE(r.size() == 1);
  CHECK(l_alpha_eq(r[0], lv("s")));
  CHECK(l_alpha_eq(l_normalize(LTerm::proj1(LTerm::pair(lv("s"), lv("t")))), lv("t")));
  CHECK(l_alpha_eq(l_normalize(LTerm::app(LTerm::lam("x", A(), lv("x")), lv("y"))), lv("y")));
  // contraction is fine in the target
  LTerm dup = LTerm::lam("x", A(), LTerm::pair(lv("x"), lv("x")));
  CHECK(l_check(dup, {}) == parse_type("A -> A * A"));
  CHECK(print_lterm(LTerm::proj0(lv("v"))) == "p0 v");
}

TEST_CASE("translation clauses") {
  CHECK(l_alpha_eq(star_translate(parse_term("(x : A)")), lv("x")));

  Term b = parse_term("break (x : A) as <phi, f> @ B in phi f");
  LTerm expected = LTerm::app(LTerm::app(k0(A(), B()), lv("x")), LTerm::app(k1(A(), B()), lv("x")));
  CHECK(l_alpha_eq(star_translate(b), expected));

  Term l = parse_term("let <x:A, y:B> = (v : A * B) in x");
  CHECK(l_alpha_eq(star_translate(l), LTerm::proj0(lv("v"))));
}

TEST_CASE("identity on translations") {
  Term s = parse_term("\\a:A. \\b:B. <a, b>");
  Term applied = Term::app(identity_break(check(s)), s);
  CHECK(l_alpha_eq(l_normalize(star_translate(applied)), l_normalize(star_translate(s))));
}

TEST_CASE("substitution lemma examples") {
  Term t = parse_term("\\c:A. c");
  CHECK(check_substitution_lemma(parse_term("(x : A -> A)"), t, "x"));
  Term s = parse_term("break (y : A) as <phi, f> @ B in phi ((g : (A -> A) -> A -> B) (x : A -> A))");
  CHECK(check_substitution_lemma(s, t, "x"));
}

TEST_CASE("step mapping examples") {
  Term beta = parse_term("(\\x:A. x) (y : A)");
  auto v = check_step_mapping(beta, {{}, RuleName::Beta});
  CHECK(v.clause == StepVerdict::Clause::Reduces);
  CHECK(v.lambda_steps == 1);

  Term apl = parse_term("(let <x:A, y:B> = (p : A * B) in \\c:A. x) (r : A)");
  CHECK(check_step_mapping(apl, {{}, RuleName::ApLConv}).clause == StepVerdict::Clause::Identical);

  Term silent = parse_term("break (\\a:A. a) as <phi, f> @ B in (z : A)");
  CHECK(check_step_mapping(silent, {{}, RuleName::BConv}).clause == StepVerdict::Clause::Identical);
}

TEST_CASE("redex in an erased position") {
  // the beta redex sits in a scrutinee whose projections are both discarded
  Term t = parse_term("let <x:A, y:B> = (\\p:A * B. p) (q : A * B) in (z : A)");
  auto rs = find_redexes(t);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].rule == RuleName::Beta);
  auto v = check_step_mapping(t, rs[0]);
  CHECK(v.clause == StepVerdict::Clause::Reduces);
  CHECK(v.lambda_steps == 0);
}

TEST_CASE("translation properties on random terms") {
  gen::Generator g(17);
  for (int i = 0; i < 200; ++i) {
    Term t = g.any_term(40);
    INFO(print_term(t));
    LTerm e = star_translate(t);
    CHECK(l_check(e, env_of(t)) == check(t));
    LTerm n = l_normalize(e);
    for (auto& r : l_step(e)) CHECK(l_alpha_eq(l_normalize(r), n));
    for (auto& r : find_redexes(t)) CHECK_NOTHROW(check_step_mapping(t, r));
  }
}

TEST_CASE("substitution lemma on random triples") {
  gen::Generator g(19);
  int done = 0;
  while (done < 200) {
    Term s = g.term(g.type(), 12, "z");
    auto fv = free_vars(s);
    if (fv.empty()) continue;
    auto [x, xt] = *fv.begin();
    Term t = g.term(xt, 8, "w");
    CHECK(check_substitution_lemma(s, t, x));
    ++done;
  }
}
