#include "doctest.h"

#include "bcalc/catalog.hpp"
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
Type C() { return Type::atom("C"); }

bool has_break(const Term& t) {
  if (t.is(TermKind::Break)) return true;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (has_break(t.child(i))) return true;
  return false;
}

}  // namespace

TEST_CASE("axiom terms") {
  CHECK(check(axiom_term(AxiomId::B1, A(), B(), C())) == parse_type("(A -> B) -> (B -> C) -> A -> C"));
  CHECK(check(axiom_term(AxiomId::B2, A(), B(), C())) == parse_type("A * B -> A"));
  CHECK(check(axiom_term(AxiomId::B3, A(), B(), C())) == parse_type("A * B -> B * A"));
  CHECK(check(axiom_term(AxiomId::B4, A(), B(), C())) == parse_type("A * (A -> B) -> B * (B -> A)"));
  CHECK(check(axiom_term(AxiomId::B5a, A(), B(), C())) == parse_type("(A * B -> C) -> A -> B -> C"));
  CHECK(check(axiom_term(AxiomId::B5b, A(), B(), C())) == parse_type("(A -> B -> C) -> A * B -> C"));
  CHECK(print_term(axiom_term(AxiomId::B5b, A(), B(), C())) ==
        "\\g:A -> B -> C. \\a:A * B. let <x:A, y:B> = a in g x y");
  for (AxiomId id : all_axioms()) {
    CHECK(parse_axiom_id(axiom_name(id)) == id);
    CHECK(free_vars(axiom_term(id, A(), B(), C())).empty());
  }
}

TEST_CASE("identity and divisibility") {
  CHECK(check(identity_break(A())) == parse_type("A -> A"));
  auto d = divisibility_terms(A(), B());
  CHECK(check(d.t) == parse_type("A -> (A -> B) -> B * (B -> A)"));
  CHECK(check(d.u) == parse_type("A -> (A -> B) -> B"));
  CHECK(find_redexes(d.t).empty());
}

TEST_CASE("axiom L") {
  Term l = axiom_L_term(A(), B());
  CHECK(check(l) == parse_type("((B -> A) -> A -> B) -> A -> B"));
  CHECK(affine_check(l));
  Term applied = Term::app(axiom_L_term(A(), A()), parse_term("\\g:A -> A. g"));
  CHECK(alpha_eq(normalize(applied).normal_form, identity_break(A())));
}

TEST_CASE("homomorphism") {
  Term h = homomorphism_term(A(), B(), C());
  CHECK(check(h) == parse_type("(A -> A * A) -> (A -> B * C) -> (A -> B) * (A -> C)"));
  CHECK(affine_check(h));
  auto n = normalize(h);
  CHECK(check(n.normal_form) == check(h));

  Type y = parse_type("(A -> B) -> (A -> B) * (A -> C)");
  for (auto& [name, part] : homomorphism_parts(A(), B(), C())) {
    INFO(name);
    CHECK_NOTHROW(check(part));
    if (name == "t5") CHECK(check(part) == Type::arrow(y, parse_type("(A -> B) * (A -> C)")));
    if (name == "pi0") CHECK(check(part) == parse_type("B * C -> B"));
    if (name == "pi1") CHECK(check(part) == parse_type("(A -> B) * (A -> C) -> A -> C"));
  }
}

TEST_CASE("break-free split") {
  Term s = break_free_split(A(), B());
  Type k = k_type(A(), B());
  CHECK(check(s) == Type::arrow(Type::arrow(Type::tensor(A(), Type::arrow(A(), k)),
                                            Type::tensor(k, Type::arrow(k, A()))),
                                Type::arrow(A(), Type::tensor(k, Type::arrow(B(), A())))));
  CHECK_FALSE(has_break(s));
  Term applied = normalize(Term::app(s, axiom_term(AxiomId::B4, A(), k, C()))).normal_form;
  CHECK(free_vars(applied).empty());
  CHECK(check(applied) == Type::arrow(A(), Type::tensor(k, Type::arrow(B(), A()))));
}

TEST_CASE("catalog at random instantiations") {
  gen::Generator g(3);
  for (int i = 0; i < 30; ++i) {
    Type a = g.type(2), b = g.type(2), c = g.type(2);
    for (AxiomId id : all_axioms()) CHECK(check(axiom_term(id, a, b, c)) == axiom_type(id, a, b, c));
    CHECK(check(identity_break(a)) == Type::arrow(a, a));
    CHECK(affine_check(homomorphism_term(a, b, c)));
    for (auto& name : catalog_names()) {
      auto t = catalog_term(name, a, b, c);
      REQUIRE(t.has_value());
      CHECK_NOTHROW(check(*t));
      CHECK(affine_check(*t));
    }
  }
  CHECK_FALSE(catalog_term("nothing", A(), B(), C()).has_value());
}
