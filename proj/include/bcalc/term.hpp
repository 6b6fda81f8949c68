#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bcalc/type.hpp"

namespace bcalc {

/// Child-index path from the root of a term. Child order per node kind:
///   Lam: body=0 | App: fun=0, arg=1 | Pair: first=0, second=1
///   Let: scrutinee=0, body=1 | Break: scrutinee=0, body=1
using Path = std::vector<std::size_t>;

enum class TermKind { Var, Lam, App, Pair, Let, Break };

namespace detail {
struct TermNode;
}

/// A Church-style term. Every variable occurrence carries its type; binders
/// carry annotations. A `break` stores only its residue type B: the types of
/// phi and f are K_B A and S_B A for the scrutinee's type A.
class Term {
public:
  static Term var(std::string name, Type type);
  static Term lam(std::string binder, Type binder_type, Term body);
  static Term app(Term fun, Term arg);
  static Term pair(Term first, Term second);
  /// let <x:xT, y:yT> = scrutinee in body. Throws if x == y.
  static Term let(std::string x, Type x_type, std::string y, Type y_type, Term scrutinee, Term body);
  /// break scrutinee as <phi, f> @ residue in body. Throws if phi == f.
  static Term brk(Term scrutinee, std::string phi, std::string f, Type residue, Term body);

  TermKind kind() const noexcept;
  bool is(TermKind k) const noexcept { return kind() == k; }

  // Var
  const std::string& name() const;
  const Type& type() const;
  // Lam
  const std::string& binder() const;
  const Type& binder_type() const;
  /// Lam, Let and Break body.
  const Term& body() const;
  // App
  const Term& fun() const;
  const Term& arg() const;
  // Pair
  const Term& first() const;
  const Term& second() const;
  // Let
  const std::string& x() const;
  const Type& x_type() const;
  const std::string& y() const;
  const Type& y_type() const;
  /// Let and Break scrutinee.
  const Term& scrutinee() const;
  // Break
  const std::string& phi() const;
  const std::string& f() const;
  const Type& residue() const;

  std::size_t arity() const noexcept;
  const Term& child(std::size_t i) const;
  /// Same node with child `i` replaced.
  Term with_child(std::size_t i, Term c) const;

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

private:
  explicit Term(std::shared_ptr<const detail::TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

namespace detail {
struct TermNode {
  TermKind kind;
  std::string name;            // Var name, Lam binder, Let x, Break phi
  std::string name2;           // Let y, Break f
  std::optional<Type> type;    // Var type, Lam binder type, Let x type, Break residue
  std::optional<Type> type2;   // Let y type
  std::optional<Term> c0;
  std::optional<Term> c1;
};
}  // namespace detail

/// Untyped term shape: a Term with every annotation removed.
struct UntypedTerm {
  TermKind kind;
  std::string name;   // Var name, Lam binder, Let x, Break phi
  std::string name2;  // Let y, Break f
  std::vector<UntypedTerm> children;
};

}  // namespace bcalc
