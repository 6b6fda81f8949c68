#include "doctest.h"

#include "bcalc/catalog.hpp"
#include "bcalc/error.hpp"
#include "bcalc/parse.hpp"
#include "bcalc/print.hpp"
#include "bcalc/syntax.hpp"
#include "support/gen.hpp"

using namespace bcalc;

namespace {
Type A() { return Type::atom("A"); }
Type B() { return Type::atom("B"); }
Type C() { return Type::atom("C"); }
}  // namespace

TEST_CASE("type grammar") {
  CHECK(parse_type("A -> B -> C") == Type::arrow(A(), Type::arrow(B(), C())));
  CHECK(parse_type("A * B -> A") == Type::arrow(Type::tensor(A(), B()), A()));
  CHECK(parse_type("(A -> B) -> B") == Type::arrow(Type::arrow(A(), B()), B()));
  CHECK(parse_type("A * B * C") == Type::tensor(Type::tensor(A(), B()), C()));
  CHECK(print_type(Type::arrow(A(), Type::arrow(B(), C()))) == "A -> B -> C");
  CHECK(print_type(Type::tensor(A(), Type::tensor(B(), C()))) == "A * (B * C)");
  CHECK(print_type(Type::arrow(Type::arrow(A(), B()), B())) == "(A -> B) -> B");
}

TEST_CASE("term grammar") {
  CHECK(alpha_eq(parse_term("\\x:A. break x as <phi,f> @ A in phi f"), identity_break(A())));
  CHECK(alpha_eq(parse_term("\\v:A*B. let <x:A, y:B> = v in x"), axiom_term(AxiomId::B2, A(), B(), C())));

  Term app = parse_term("(f : A -> B -> C) (x : A) (y : B)");
  REQUIRE(app.is(TermKind::App));
  CHECK(app.fun().is(TermKind::App));
  CHECK(app.fun().fun().name() == "f");
  CHECK(app.arg().name() == "y");

  Term commented = parse_term("-- leading comment\n\\x:A. x -- trailing\n");
  CHECK(alpha_eq(commented, Term::lam("x", A(), Term::var("x", A()))));
}

TEST_CASE("printing") {
  CHECK(print_term(identity_break(A())) == "\\x:A. break x as <phi, f> @ A in phi f");
  CHECK(print_term(parse_term("(f : A -> B -> C) (x : A) (y : B)")) == "(f : A -> B -> C) (x : A) (y : B)");
  CHECK(print_term(parse_term("\\f:A -> B. \\x:A. f x")) == "\\f:A -> B. \\x:A. f x");
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_type("A ->"), ParseError);
  CHECK_THROWS_AS(parse_term("\\x:A. "), ParseError);
  CHECK_THROWS_AS(parse_term("let <x:A, x:B> = (v : A * B) in x"), ParseError);
  CHECK_THROWS_AS(parse_term("break (a : A) as <p, p> @ B in p"), ParseError);
  CHECK_THROWS_AS(parse_term("y"), ParseError);
  try {
    parse_term("\\x:A.\n  <x, >");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().start <= e.span().end);
  }
}

TEST_CASE("untyped grammar") {
  UntypedTerm u = parse_untyped_term("\\x. break x as <phi, f> in phi f");
  CHECK(u.kind == TermKind::Lam);
  CHECK(print_untyped(u) == "\\x. break x as <phi, f> in phi f");
}

TEST_CASE("round trip on random terms") {
  gen::Generator g(5);
  for (int i = 0; i < 500; ++i) {
    Term t = g.any_term(40);
    std::string text = print_term(t);
    Term back = parse_term(text);
    INFO(text);
    CHECK(alpha_eq(back, t));
    CHECK(print_term(back) == text);
    Type ty = g.type(3);
    CHECK(parse_type(print_type(ty)) == ty);
  }
}
