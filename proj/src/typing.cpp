#include "bcalc/typing.hpp"

#include <vector>

#include "bcalc/error.hpp"
#include "bcalc/print.hpp"

namespace bcalc {

namespace {

using Used = std::set<std::string>;

class Checker {
public:
  explicit Checker(const TypedVarSet& context) : context_(context) {}

  Type run(const Term& t) {
    Used used;
    return go(t, used);
  }

private:
  [[noreturn]] void mismatch(const std::string& what, const Type& expected, const Type& found) {
    throw TypeError(TypeError::Kind::TypeMismatch, path_,
                    what + ": expected " + print_type(expected) + ", found " + print_type(found), expected, found);
  }

  void join(Used& into, const Used& other) {
    for (auto& n : other) {
      if (into.contains(n))
        throw TypeError(TypeError::Kind::AffinityViolation, path_, "variable " + n + " is used more than once",
                        std::nullopt, std::nullopt, n);
      into.insert(n);
    }
  }

  Type child(const Term& t, std::size_t i, Used& used) {
    path_.push_back(i);
    Type r = go(t.child(i), used);
    path_.pop_back();
    return r;
  }

  Type under_binders(const Term& body, std::vector<std::pair<std::string, Type>> binders, std::size_t index,
                     Used& used) {
    for (auto& b : binders) env_.push_back(b);
    path_.push_back(index);
    Type r = go(body, used);
    path_.pop_back();
    env_.erase(env_.end() - static_cast<std::ptrdiff_t>(binders.size()), env_.end());
    for (auto& b : binders) used.erase(b.first);
    return r;
  }

  Type go(const Term& t, Used& used) {
    switch (t.kind()) {
      case TermKind::Var: {
        for (std::size_t i = env_.size(); i-- > 0;) {
          if (env_[i].first != t.name()) continue;
          if (!(env_[i].second == t.type())) mismatch("variable " + t.name(), env_[i].second, t.type());
          used.insert(t.name());
          return t.type();
        }
        auto it = context_.find(t.name());
        if (it == context_.end())
          throw TypeError(TypeError::Kind::UnboundVariable, path_, "unbound variable " + t.name(), std::nullopt,
                          std::nullopt, t.name());
        if (!(it->second == t.type())) mismatch("variable " + t.name(), it->second, t.type());
        used.insert(t.name());
        return t.type();
      }
      case TermKind::Lam: {
        Type body = under_binders(t.body(), {{t.binder(), t.binder_type()}}, 0, used);
        return Type::arrow(t.binder_type(), body);
      }
      case TermKind::App: {
        Used uf, ua;
        Type f = child(t, 0, uf);
        Type a = child(t, 1, ua);
        if (!f.is_arrow())
          throw TypeError(TypeError::Kind::TypeMismatch, path_, "applying a term of non-function type " + print_type(f),
                          std::nullopt, f);
        if (!(f.dom() == a)) {
          path_.push_back(1);
          mismatch("argument", f.dom(), a);
        }
        join(uf, ua);
        join(used, uf);
        return f.cod();
      }
      case TermKind::Pair: {
        Used ul, ur;
        Type l = child(t, 0, ul);
        Type r = child(t, 1, ur);
        join(ul, ur);
        join(used, ul);
        return Type::tensor(l, r);
      }
      case TermKind::Let: {
        Used us, ub;
        Type s = child(t, 0, us);
        Type expected = Type::tensor(t.x_type(), t.y_type());
        if (!(s == expected)) mismatch("let scrutinee", expected, s);
        Type body = under_binders(t.body(), {{t.x(), t.x_type()}, {t.y(), t.y_type()}}, 1, ub);
        join(us, ub);
        join(used, us);
        return body;
      }
      case TermKind::Break: {
        Used us, ub;
        Type a = child(t, 0, us);
        auto [k, s] = ks_types(a, t.residue());
        Type body = under_binders(t.body(), {{t.phi(), k}, {t.f(), s}}, 1, ub);
        join(us, ub);
        join(used, us);
        return body;
      }
    }
    return t.type();
  }

  const TypedVarSet& context_;
  std::vector<std::pair<std::string, Type>> env_;
  Path path_;
};

}  // namespace

Type check(const Term& t) { return check_in_context(t, free_vars(t)); }

Type check_in_context(const Term& t, const TypedVarSet& context) { return Checker(context).run(t); }

UntypedTerm erase(const Term& t) {
  UntypedTerm u{t.kind(), {}, {}, {}};
  switch (t.kind()) {
    case TermKind::Var: u.name = t.name(); break;
    case TermKind::Lam: u.name = t.binder(); break;
    case TermKind::Let:
      u.name = t.x();
      u.name2 = t.y();
      break;
    case TermKind::Break:
      u.name = t.phi();
      u.name2 = t.f();
      break;
    default: break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) u.children.push_back(erase(t.child(i)));
  return u;
}

namespace {

bool matches(const Type& pattern, const Type& t, const std::set<std::string>& vars, std::map<std::string, Type>& sub) {
  if (pattern.is_atom() && vars.contains(pattern.name())) {
    auto [it, inserted] = sub.emplace(pattern.name(), t);
    return inserted || it->second == t;
  }
  if (pattern.kind() != t.kind()) return false;
  if (pattern.is_atom()) return pattern.name() == t.name();
  return matches(pattern.left(), t.left(), vars, sub) && matches(pattern.right(), t.right(), vars, sub);
}

}  // namespace

std::optional<std::map<std::string, Type>> match_instance(const TypeScheme& scheme, const Type& instance) {
  std::map<std::string, Type> sub;
  if (!matches(scheme.body, instance, scheme.variables, sub)) return std::nullopt;
  return sub;
}

std::string print_scheme(const TypeScheme& scheme) { return print_type(scheme.body); }

}  // namespace bcalc
