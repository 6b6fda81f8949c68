#include "bcalc/term.hpp"

#include <cassert>

#include "bcalc/error.hpp"

namespace bcalc {

using detail::TermNode;

Term Term::var(std::string name, Type type) {
  return Term(std::make_shared<const TermNode>(
      TermNode{TermKind::Var, std::move(name), {}, std::move(type), std::nullopt, std::nullopt, std::nullopt}));
}

Term Term::lam(std::string binder, Type binder_type, Term body) {
  return Term(std::make_shared<const TermNode>(
      TermNode{TermKind::Lam, std::move(binder), {}, std::move(binder_type), std::nullopt, std::move(body), std::nullopt}));
}

Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<const TermNode>(
      TermNode{TermKind::App, {}, {}, std::nullopt, std::nullopt, std::move(fun), std::move(arg)}));
}

Term Term::pair(Term first, Term second) {
  return Term(std::make_shared<const TermNode>(
      TermNode{TermKind::Pair, {}, {}, std::nullopt, std::nullopt, std::move(first), std::move(second)}));
}

Term Term::let(std::string x, Type x_type, std::string y, Type y_type, Term scrutinee, Term body) {
  if (x == y) throw Error("let binds the same name twice: " + x);
  return Term(std::make_shared<const TermNode>(TermNode{TermKind::Let, std::move(x), std::move(y), std::move(x_type),
                                                        std::move(y_type), std::move(scrutinee), std::move(body)}));
}

Term Term::brk(Term scrutinee, std::string phi, std::string f, Type residue, Term body) {
  if (phi == f) throw Error("break binds the same name twice: " + phi);
  return Term(std::make_shared<const TermNode>(TermNode{TermKind::Break, std::move(phi), std::move(f),
                                                        std::move(residue), std::nullopt, std::move(scrutinee),
                                                        std::move(body)}));
}

TermKind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  assert(is(TermKind::Var));
  return node_->name;
}
const Type& Term::type() const {
  assert(is(TermKind::Var));
  return *node_->type;
}
const std::string& Term::binder() const {
  assert(is(TermKind::Lam));
  return node_->name;
}
const Type& Term::binder_type() const {
  assert(is(TermKind::Lam));
  return *node_->type;
}
const Term& Term::body() const {
  assert(is(TermKind::Lam) || is(TermKind::Let) || is(TermKind::Break));
  return is(TermKind::Lam) ? *node_->c0 : *node_->c1;
}
const Term& Term::fun() const {
  assert(is(TermKind::App));
  return *node_->c0;
}
const Term& Term::arg() const {
  assert(is(TermKind::App));
  return *node_->c1;
}
const Term& Term::first() const {
  assert(is(TermKind::Pair));
  return *node_->c0;
}
const Term& Term::second() const {
  assert(is(TermKind::Pair));
  return *node_->c1;
}
const std::string& Term::x() const {
  assert(is(TermKind::Let));
  return node_->name;
}
const Type& Term::x_type() const {
  assert(is(TermKind::Let));
  return *node_->type;
}
const std::string& Term::y() const {
  assert(is(TermKind::Let));
  return node_->name2;
}
const Type& Term::y_type() const {
  assert(is(TermKind::Let));
  return *node_->type2;
}
const Term& Term::scrutinee() const {
  assert(is(TermKind::Let) || is(TermKind::Break));
  return *node_->c0;
}
const std::string& Term::phi() const {
  assert(is(TermKind::Break));
  return node_->name;
}
const std::string& Term::f() const {
  assert(is(TermKind::Break));
  return node_->name2;
}
const Type& Term::residue() const {
  assert(is(TermKind::Break));
  return *node_->type;
}

std::size_t Term::arity() const noexcept {
  switch (kind()) {
    case TermKind::Var: return 0;
    case TermKind::Lam: return 1;
    default: return 2;
  }
}

const Term& Term::child(std::size_t i) const {
  assert(i < arity());
  return i == 0 ? *node_->c0 : *node_->c1;
}

Term Term::with_child(std::size_t i, Term c) const {
  assert(i < arity());
  TermNode copy = *node_;
  (i == 0 ? copy.c0 : copy.c1) = std::move(c);
  return Term(std::make_shared<const TermNode>(std::move(copy)));
}

}  // namespace bcalc
