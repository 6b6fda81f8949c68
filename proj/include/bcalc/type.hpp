#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>

namespace bcalc {

/// A simple type: type-variable atoms closed under `->` and `*`.
///
/// Values are immutable and share structure; copying is a reference-count
/// bump. Equality is structural.
class Type {
public:
  enum class Kind { Atom, Arrow, Tensor };

  static Type atom(std::string name);
  static Type arrow(Type dom, Type cod);
  static Type tensor(Type left, Type right);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_arrow() const noexcept { return kind() == Kind::Arrow; }
  bool is_tensor() const noexcept { return kind() == Kind::Tensor; }

  /// Atom name. Only valid on atoms.
  const std::string& name() const;
  /// Arrow domain / tensor left factor.
  const Type& left() const;
  /// Arrow codomain / tensor right factor.
  const Type& right() const;
  const Type& dom() const { return left(); }
  const Type& cod() const { return right(); }

  friend bool operator==(const Type& a, const Type& b);
  /// Total order used to keep sequent antecedents sorted.
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Number of nodes in the type tree.
std::size_t type_size(const Type& t);

/// K_B A = (A -> B) -> B.
Type k_type(const Type& a, const Type& residue);
/// S_B A = B -> A.
Type s_type(const Type& a, const Type& residue);
/// (K_B A, S_B A) for scrutinee type `a` and residue `residue`.
std::pair<Type, Type> ks_types(const Type& a, const Type& residue);

}  // namespace bcalc
