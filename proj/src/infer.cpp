#include <map>
#include <vector>

#include "bcalc/error.hpp"
#include "bcalc/print.hpp"
#include "bcalc/typing.hpp"

namespace bcalc {

namespace {

// Unification variables are atoms named "?n"; user atoms never start with '?'.
class Inferencer {
public:
  TypeScheme run(const UntypedTerm& u) {
    std::set<std::string> used;
    Type body = resolve(go(u, used));

    std::map<std::string, std::string> names;
    TypeScheme out{rename(body, names), {}, {}};
    for (auto& [name, t] : free_) out.context.emplace(name, rename(resolve(t), names));
    for (auto& [_, n] : names) out.variables.insert(n);
    return out;
  }

private:
  Type fresh() { return Type::atom("?" + std::to_string(counter_++)); }

  static bool is_var(const Type& t) { return t.is_atom() && !t.name().empty() && t.name()[0] == '?'; }

  Type walk(Type t) const {
    while (is_var(t)) {
      auto it = subst_.find(t.name());
      if (it == subst_.end()) break;
      t = it->second;
    }
    return t;
  }

  Type resolve(const Type& t) const {
    Type w = walk(t);
    if (w.is_atom()) return w;
    Type l = resolve(w.left()), r = resolve(w.right());
    return w.is_arrow() ? Type::arrow(l, r) : Type::tensor(l, r);
  }

  bool occurs(const std::string& v, const Type& t) const {
    Type w = walk(t);
    if (w.is_atom()) return w.name() == v;
    return occurs(v, w.left()) || occurs(v, w.right());
  }

  void unify(const Type& a0, const Type& b0) {
    Type a = walk(a0), b = walk(b0);
    if (is_var(a) && is_var(b) && a.name() == b.name()) return;
    if (is_var(a) || is_var(b)) {
      if (!is_var(a)) std::swap(a, b);
      if (occurs(a.name(), b))
        throw InferenceError(InferenceError::Kind::OccursCheck, path_,
                             "occurs check: " + print_type(resolve(a)) + " in " + print_type(resolve(b)));
      subst_.emplace(a.name(), b);
      return;
    }
    if (a.kind() != b.kind() || (a.is_atom() && a.name() != b.name()))
      throw InferenceError(InferenceError::Kind::UnificationFailure, path_,
                           "cannot unify " + print_type(resolve(a)) + " with " + print_type(resolve(b)));
    if (a.is_atom()) return;
    unify(a.left(), b.left());
    unify(a.right(), b.right());
  }

  void join(std::set<std::string>& into, const std::set<std::string>& other) {
    for (auto& n : other) {
      if (!into.insert(n).second)
        throw InferenceError(InferenceError::Kind::AffinityViolation, path_, "variable " + n + " is used more than once");
    }
  }

  Type child(const UntypedTerm& u, std::size_t i, std::set<std::string>& used) {
    path_.push_back(i);
    Type r = go(u.children[i], used);
    path_.pop_back();
    return r;
  }

  Type under(const UntypedTerm& u, std::vector<std::pair<std::string, Type>> binders, std::set<std::string>& used) {
    for (auto& b : binders) env_.push_back(b);
    Type r = child(u, u.children.size() - 1, used);
    env_.erase(env_.end() - static_cast<std::ptrdiff_t>(binders.size()), env_.end());
    for (auto& b : binders) used.erase(b.first);
    return r;
  }

  Type go(const UntypedTerm& u, std::set<std::string>& used) {
    switch (u.kind) {
      case TermKind::Var: {
        used.insert(u.name);
        for (std::size_t i = env_.size(); i-- > 0;)
          if (env_[i].first == u.name) return env_[i].second;
        auto it = free_.find(u.name);
        if (it == free_.end()) it = free_.emplace(u.name, fresh()).first;
        return it->second;
      }
      case TermKind::Lam: {
        Type a = fresh();
        Type b = under(u, {{u.name, a}}, used);
        return Type::arrow(a, b);
      }
      case TermKind::App: {
        std::set<std::string> uf, ua;
        Type f = child(u, 0, uf);
        Type a = child(u, 1, ua);
        Type r = fresh();
        unify(f, Type::arrow(a, r));
        join(uf, ua);
        join(used, uf);
        return r;
      }
      case TermKind::Pair: {
        std::set<std::string> ul, ur;
        Type l = child(u, 0, ul);
        Type r = child(u, 1, ur);
        join(ul, ur);
        join(used, ul);
        return Type::tensor(l, r);
      }
      case TermKind::Let: {
        std::set<std::string> us, ub;
        Type s = child(u, 0, us);
        Type a = fresh(), b = fresh();
        unify(s, Type::tensor(a, b));
        Type body = under(u, {{u.name, a}, {u.name2, b}}, ub);
        join(us, ub);
        join(used, us);
        return body;
      }
      case TermKind::Break: {
        std::set<std::string> us, ub;
        Type a = child(u, 0, us);
        Type residue = fresh();
        auto [k, s] = ks_types(a, residue);
        Type body = under(u, {{u.name, k}, {u.name2, s}}, ub);
        join(us, ub);
        join(used, us);
        return body;
      }
    }
    return fresh();
  }

  static std::string pretty_name(std::size_t i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
  }

  static Type rename(const Type& t, std::map<std::string, std::string>& names) {
    if (t.is_atom()) {
      auto it = names.find(t.name());
      if (it == names.end()) it = names.emplace(t.name(), pretty_name(names.size())).first;
      return Type::atom(it->second);
    }
    Type l = rename(t.left(), names);
    Type r = rename(t.right(), names);
    return t.is_arrow() ? Type::arrow(l, r) : Type::tensor(l, r);
  }

  std::map<std::string, Type> subst_;
  std::map<std::string, Type> free_;
  std::vector<std::pair<std::string, Type>> env_;
  Path path_;
  std::size_t counter_ = 0;
};

}  // namespace

TypeScheme infer_principal(const UntypedTerm& u) { return Inferencer().run(u); }

}  // namespace bcalc
