#include "doctest.h"

#include <algorithm>

#include "bcalc/catalog.hpp"
#include "bcalc/error.hpp"
#include "bcalc/parse.hpp"
#include "bcalc/print.hpp"
#include "bcalc/reduction.hpp"
#include "bcalc/sequent.hpp"
#include "bcalc/syntax.hpp"
#include "bcalc/typing.hpp"
#include "support/gen.hpp"

using namespace bcalc;

namespace {

Type A() { return Type::atom("A"); }
Type B() { return Type::atom("B"); }
Type C() { return Type::atom("C"); }
Type T(const char* s) { return parse_type(s); }

Sequent end_of(const Term& t) {
  std::vector<Type> ant;
  for (auto& [n, ty] : free_vars(t)) ant.push_back(ty);
  return Sequent(ant, check(t));
}

bool contains(const std::vector<Type>& m, const Type& t) { return std::find(m.begin(), m.end(), t) != m.end(); }

}  // namespace

TEST_CASE("sequents") {
  CHECK(Sequent({B(), A()}, C()) == Sequent({A(), B()}, C()));
  CHECK(print_sequent(Sequent({}, A())) == "|- A");
  CHECK(print_sequent(Sequent({A(), T("A -> B")}, B())) == "A, A -> B |- B");
}

TEST_CASE("checking derivations") {
  CHECK(check_derivation(make_asm({}, A())) == Sequent({A()}, A()));

  SDerivation bad = make_cut(make_asm({}, A()), make_asm({}, A()));
  bad.premises[1] = make_asm({}, B());
  try {
    check_derivation(bad);
    FAIL("mismatched cut accepted");
  } catch (const DerivationError& e) {
    CHECK(e.kind() == DerivationError::Kind::InvalidRule);
  }

  SDerivation pair = make_tens_r(make_asm({}, A()), make_asm({}, B()));
  CHECK(check_derivation(pair) == Sequent({A(), B()}, T("A * B")));
  CHECK(alpha_eq(sequent_to_term(pair), parse_term("<(h0 : A), (h1 : B)>")));
  CHECK(alpha_eq(sequent_to_term(make_asm({}, A())), parse_term("(h0 : A)")));
}

TEST_CASE("natural deduction to sequents") {
  SDerivation x = nd_to_sequent(parse_term("(x : A)"));
  CHECK(x.rule == SRule::Asm);
  CHECK(node_count(x) == 1);

  SDerivation id = nd_to_sequent(identity_break(A()));
  CHECK(id.rule == SRule::ArrR);
  CHECK(id.premises[0].rule == SRule::Brk);
  CHECK(check_derivation(id) == Sequent({}, T("A -> A")));
}

TEST_CASE("cut elimination examples") {
  SDerivation d = nd_to_sequent(parse_term("\\f:A -> B. \\x:A. f x"));
  CHECK(count_rule(d, SRule::Cut) == 0);
  CHECK(print_derivation(eliminate_cuts(d)) == print_derivation(d));

  // cut against an axiom
  SDerivation right = nd_to_sequent(parse_term("\\y:B. (x : A)"));
  SDerivation cut = make_cut(make_asm({C()}, A()), right);
  SDerivation e = eliminate_cuts(cut);
  CHECK(count_rule(e, SRule::Cut) == 0);
  CHECK(check_derivation(e) == check_derivation(cut));

  Term u = divisibility_terms(A(), B()).u;
  SDerivation du = nd_to_sequent(u);
  CHECK(count_rule(du, SRule::Cut) > 0);
  SDerivation eu = eliminate_cuts(du);
  CHECK(count_rule(eu, SRule::Cut) == 0);
  CHECK(check_derivation(eu) == Sequent({}, T("A -> (A -> B) -> B")));
  CHECK(count_rule(eu, SRule::Brk) >= 1);
}

TEST_CASE("break from cut, empty context") {
  auto [k, s] = ks_types(A(), B());
  SDerivation da = nd_to_sequent(parse_term("\\a:A. a")) ;
  Type a = T("A -> A");
  auto [ka, sa] = ks_types(a, B());
  SDerivation dc = make_tens_r(make_asm({C()}, ka), make_asm({}, sa));
  SDerivation r = brk_via_cut_empty(da, dc);
  CHECK(check_derivation(r) == Sequent({C()}, Type::tensor(ka, sa)));
  CHECK(count_rule(r, SRule::Brk) == 0);
  CHECK(count_rule(r, SRule::Cut) == 2);
  CHECK(node_count(r) <= node_count(da) * 2 + node_count(dc) + 6);

  SDerivation open = make_asm({}, A());
  CHECK_THROWS_AS(brk_via_cut_empty(open, dc), DerivationError);
  (void)k;
  (void)s;
}

TEST_CASE("break from cut, superfluous assumption") {
  SDerivation da = make_asm({C()}, A());
  auto [k, s] = ks_types(A(), B());
  SDerivation only_s = make_asm({}, s);
  SDerivation rk = brk_via_cut_superfluous(da, only_s, Superfluous::K, B());
  CHECK(check_derivation(rk) == Sequent({A(), C()}, s));
  CHECK(count_rule(rk, SRule::Cut) == 1);
  CHECK(count_rule(rk, SRule::Brk) == 0);

  SDerivation only_k = make_asm({}, k);
  SDerivation rs = brk_via_cut_superfluous(da, only_k, Superfluous::S, B());
  CHECK(check_derivation(rs) == Sequent({A(), C()}, k));
  CHECK(count_rule(rs, SRule::Cut) == 1);

  SDerivation both = make_tens_r(make_asm({}, k), make_asm({}, s));
  CHECK_THROWS_AS(brk_via_cut_superfluous(da, both, Superfluous::K, B()), DerivationError);
  CHECK_THROWS_AS(brk_via_cut_superfluous(da, both, Superfluous::S, B()), DerivationError);
}

TEST_CASE("text format") {
  SDerivation d = nd_to_sequent(divisibility_terms(A(), B()).t);
  std::string text = print_derivation(d);
  SDerivation back = parse_derivation(text);
  CHECK(print_derivation(back) == text);
  CHECK(check_derivation(back) == check_derivation(d));
  CHECK(print_derivation(make_asm({}, A())) == "(ASM A |- A)");
  CHECK_THROWS_AS(parse_derivation("(ASM A |- "), ParseError);
}

TEST_CASE("bounded search") {
  auto found = search_cut_free(Sequent({}, T("A * B -> B * A")));
  REQUIRE(found.has_value());
  CHECK(count_rule(*found, SRule::Cut) == 0);
  CHECK(count_rule(*found, SRule::Brk) == 0);
  CHECK(check_derivation(*found) == Sequent({}, T("A * B -> B * A")));

  CHECK_FALSE(search_cut_free(Sequent({}, T("A -> (A -> B) -> B * (B -> A)")), 8).has_value());
  CHECK(check_derivation(nd_to_sequent(divisibility_terms(A(), B()).t)) ==
        Sequent({}, T("A -> (A -> B) -> B * (B -> A)")));
}

TEST_CASE("sequent properties on random terms") {
  gen::Generator g(31);
  for (int i = 0; i < 150; ++i) {
    Term t = g.any_term(40);
    INFO(print_term(t));
    SDerivation d = nd_to_sequent(t);
    Sequent end = check_derivation(d);
    CHECK(end == end_of(t));
    CHECK(check(sequent_to_term(d)) == check(t));
    SDerivation e = eliminate_cuts(d);
    CHECK(count_rule(e, SRule::Cut) == 0);
    CHECK(check_derivation(e) == end);
    CHECK(check(sequent_to_term(e)) == end.succedent());
    // a cut whose formula is never used discards its left derivation
    CHECK(count_rule(e, SRule::Brk) <= count_rule(d, SRule::Brk));
  }
}

TEST_CASE("b-conv redexes admit a cut construction") {
  gen::Generator g(37);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    Term t = g.redex_term(40);
    for (auto& r : find_redexes(t)) {
      if (r.rule != RuleName::BConv) continue;
      Term ct = canonicalize(t);
      const Term& b = subterm_at(ct, r.position);
      const Term& s = b.scrutinee();
      const Term& body = b.body();
      auto [k, sf] = ks_types(type_of(s), b.residue());
      SDerivation ds = nd_to_sequent(s);
      SDerivation dc = nd_to_sequent(body);
      const auto& ant = dc.conclusion.antecedent();
      bool uses_phi = occurs_free(body, b.phi()), uses_f = occurs_free(body, b.f());
      // a coincidental K or S among the other assumptions would blur the check
      if ((!uses_phi && contains(ant, k)) || (!uses_f && contains(ant, sf))) continue;
      ++seen;
      SDerivation out = [&] {
        if (free_names(s).empty()) {
          std::vector<Type> missing;
          if (!uses_phi) missing.push_back(k);
          if (!uses_f) missing.push_back(sf);
          return brk_via_cut_empty(ds, weaken(dc, missing), b.residue());
        }
        if (!uses_phi) return brk_via_cut_superfluous(ds, uses_f ? dc : weaken(dc, {sf}), Superfluous::K, b.residue());
        return brk_via_cut_superfluous(ds, dc, Superfluous::S, b.residue());
      }();
      CHECK(count_rule(out, SRule::Brk) == count_rule(ds, SRule::Brk) + count_rule(dc, SRule::Brk));
      CHECK(check_derivation(out) == check_derivation(nd_to_sequent(b)));
    }
  }
  CHECK(seen > 20);
}
