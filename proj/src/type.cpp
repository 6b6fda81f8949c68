#include "bcalc/type.hpp"

#include <cassert>
#include <optional>

namespace bcalc {

struct Type::Node {
  Kind kind;
  std::string name;
  std::optional<Type> left;
  std::optional<Type> right;
};

Type Type::atom(std::string name) {
  return Type(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), std::nullopt, std::nullopt}));
}

Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const Node>(Node{Kind::Arrow, {}, std::move(dom), std::move(cod)}));
}

Type Type::tensor(Type left, Type right) {
  return Type(std::make_shared<const Node>(Node{Kind::Tensor, {}, std::move(left), std::move(right)}));
}

Type::Kind Type::kind() const noexcept { return node_->kind; }

const std::string& Type::name() const {
  assert(is_atom());
  return node_->name;
}

const Type& Type::left() const {
  assert(!is_atom());
  return *node_->left;
}

const Type& Type::right() const {
  assert(!is_atom());
  return *node_->right;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  if (a.is_atom()) return a.name() <=> b.name();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

std::size_t type_size(const Type& t) {
  if (t.is_atom()) return 1;
  return 1 + type_size(t.left()) + type_size(t.right());
}

Type k_type(const Type& a, const Type& residue) {
  return Type::arrow(Type::arrow(a, residue), residue);
}

Type s_type(const Type& a, const Type& residue) { return Type::arrow(residue, a); }

std::pair<Type, Type> ks_types(const Type& a, const Type& residue) {
  return {k_type(a, residue), s_type(a, residue)};
}

}  // namespace bcalc
