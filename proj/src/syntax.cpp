#include "bcalc/syntax.hpp"

#include <algorithm>
#include <cassert>

#include "bcalc/error.hpp"

namespace bcalc {

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, TypedVarSet& out, Path& path) {
  switch (t.kind()) {
    case TermKind::Var: {
      if (std::find(bound.begin(), bound.end(), t.name()) != bound.end()) return;
      auto [it, inserted] = out.emplace(t.name(), t.type());
      if (!inserted && !(it->second == t.type()))
        throw TypeError(TypeError::Kind::InconsistentVariable, path,
                        "variable " + t.name() + " occurs at two different types", it->second, t.type(), t.name());
      return;
    }
    case TermKind::Lam:
      bound.push_back(t.binder());
      path.push_back(0);
      collect_free(t.body(), bound, out, path);
      path.pop_back();
      bound.pop_back();
      return;
    case TermKind::App:
    case TermKind::Pair:
      for (std::size_t i = 0; i < 2; ++i) {
        path.push_back(i);
        collect_free(t.child(i), bound, out, path);
        path.pop_back();
      }
      return;
    case TermKind::Let:
    case TermKind::Break: {
      path.push_back(0);
      collect_free(t.scrutinee(), bound, out, path);
      path.back() = 1;
      const bool is_let = t.is(TermKind::Let);
      bound.push_back(is_let ? t.x() : t.phi());
      bound.push_back(is_let ? t.y() : t.f());
      collect_free(t.body(), bound, out, path);
      bound.pop_back();
      bound.pop_back();
      path.pop_back();
      return;
    }
  }
}

// Binder names introduced at a node (empty for Var/App/Pair).
std::vector<std::string> binders_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Lam: return {t.binder()};
    case TermKind::Let: return {t.x(), t.y()};
    case TermKind::Break: return {t.phi(), t.f()};
    default: return {};
  }
}

void collect_free_names(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      return;
    case TermKind::Lam:
      bound.push_back(t.binder());
      collect_free_names(t.body(), bound, out);
      bound.pop_back();
      return;
    case TermKind::App:
    case TermKind::Pair:
      collect_free_names(t.child(0), bound, out);
      collect_free_names(t.child(1), bound, out);
      return;
    case TermKind::Let:
    case TermKind::Break: {
      collect_free_names(t.scrutinee(), bound, out);
      auto names = binders_of(t);
      bound.insert(bound.end(), names.begin(), names.end());
      collect_free_names(t.body(), bound, out);
      bound.resize(bound.size() - 2);
      return;
    }
  }
}

void collect_all_names(const Term& t, std::set<std::string>& out) {
  if (t.is(TermKind::Var)) {
    out.insert(t.name());
    return;
  }
  for (auto& n : binders_of(t)) out.insert(n);
  for (std::size_t i = 0; i < t.arity(); ++i) collect_all_names(t.child(i), out);
}

using Sigma = std::map<std::string, Term>;

Term subst(const Term& t, const Sigma& sigma, const std::set<std::string>& range_fv);

// Removes `names` from sigma and renames any that would capture a free name
// of the substituted terms. Returns the (possibly renamed) binder names.
std::vector<std::string> enter_binders(const std::vector<std::string>& names, const std::vector<Type>& types,
                                       const Term& body, Sigma& sigma, std::set<std::string>& range_fv) {
  for (auto& n : names) sigma.erase(n);
  std::vector<std::string> out = names;
  if (sigma.empty()) return out;
  std::set<std::string> avoid = range_fv;
  collect_all_names(body, avoid);
  for (auto& [k, _] : sigma) avoid.insert(k);
  for (auto& n : names) avoid.insert(n);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!range_fv.contains(names[i])) continue;
    std::string fresh = fresh_name(names[i], avoid);
    avoid.insert(fresh);
    out[i] = fresh;
    sigma.insert_or_assign(names[i], Term::var(fresh, types[i]));
    range_fv.insert(fresh);
  }
  return out;
}

Term subst(const Term& t, const Sigma& sigma, const std::set<std::string>& range_fv) {
  if (sigma.empty()) return t;
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case TermKind::App:
      return Term::app(subst(t.fun(), sigma, range_fv), subst(t.arg(), sigma, range_fv));
    case TermKind::Pair:
      return Term::pair(subst(t.first(), sigma, range_fv), subst(t.second(), sigma, range_fv));
    case TermKind::Lam: {
      Sigma inner = sigma;
      auto rfv = range_fv;
      auto names = enter_binders({t.binder()}, {t.binder_type()}, t.body(), inner, rfv);
      return Term::lam(names[0], t.binder_type(), subst(t.body(), inner, rfv));
    }
    case TermKind::Let: {
      Term scrut = subst(t.scrutinee(), sigma, range_fv);
      Sigma inner = sigma;
      auto rfv = range_fv;
      auto names = enter_binders({t.x(), t.y()}, {t.x_type(), t.y_type()}, t.body(), inner, rfv);
      return Term::let(names[0], t.x_type(), names[1], t.y_type(), scrut, subst(t.body(), inner, rfv));
    }
    case TermKind::Break: {
      Term scrut = subst(t.scrutinee(), sigma, range_fv);
      auto [k, s] = ks_types(type_of(t.scrutinee()), t.residue());
      Sigma inner = sigma;
      auto rfv = range_fv;
      auto names = enter_binders({t.phi(), t.f()}, {k, s}, t.body(), inner, rfv);
      return Term::brk(scrut, names[0], names[1], t.residue(), subst(t.body(), inner, rfv));
    }
  }
  return t;
}

using Env = std::vector<std::string>;

// Index of the innermost binding of `name`, or -1.
long lookup(const Env& env, const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == name) return static_cast<long>(i);
  return -1;
}

bool alpha(const Term& a, const Term& b, Env& ea, Env& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      if (!(a.type() == b.type())) return false;
      long ia = lookup(ea, a.name());
      long ib = lookup(eb, b.name());
      if (ia != ib) return false;
      return ia >= 0 || a.name() == b.name();
    }
    case TermKind::Lam: {
      if (!(a.binder_type() == b.binder_type())) return false;
      ea.push_back(a.binder());
      eb.push_back(b.binder());
      bool r = alpha(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    case TermKind::App:
    case TermKind::Pair:
      return alpha(a.child(0), b.child(0), ea, eb) && alpha(a.child(1), b.child(1), ea, eb);
    case TermKind::Let:
    case TermKind::Break: {
      if (a.is(TermKind::Let)) {
        if (!(a.x_type() == b.x_type()) || !(a.y_type() == b.y_type())) return false;
      } else if (!(a.residue() == b.residue())) {
        return false;
      }
      if (!alpha(a.scrutinee(), b.scrutinee(), ea, eb)) return false;
      auto na = binders_of(a);
      auto nb = binders_of(b);
      ea.insert(ea.end(), na.begin(), na.end());
      eb.insert(eb.end(), nb.begin(), nb.end());
      bool r = alpha(a.body(), b.body(), ea, eb);
      ea.resize(ea.size() - 2);
      eb.resize(eb.size() - 2);
      return r;
    }
  }
  return false;
}

using Renames = std::vector<std::pair<std::string, std::string>>;

std::string renamed(const Renames& env, const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i].first == name) return env[i].second;
  return name;
}

std::string claim(const std::string& name, std::set<std::string>& used) {
  std::string out = used.contains(name) ? fresh_name(name, used) : name;
  used.insert(out);
  return out;
}

Term canon(const Term& t, Renames& env, std::set<std::string>& used) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto n = renamed(env, t.name());
      return n == t.name() ? t : Term::var(n, t.type());
    }
    case TermKind::Lam: {
      auto n = claim(t.binder(), used);
      env.emplace_back(t.binder(), n);
      Term body = canon(t.body(), env, used);
      env.pop_back();
      return Term::lam(n, t.binder_type(), body);
    }
    case TermKind::App: {
      Term f = canon(t.fun(), env, used);
      return Term::app(f, canon(t.arg(), env, used));
    }
    case TermKind::Pair: {
      Term a = canon(t.first(), env, used);
      return Term::pair(a, canon(t.second(), env, used));
    }
    case TermKind::Let:
    case TermKind::Break: {
      auto names = binders_of(t);
      auto n0 = claim(names[0], used);
      auto n1 = claim(names[1], used);
      Term scrut = canon(t.scrutinee(), env, used);
      env.emplace_back(names[0], n0);
      env.emplace_back(names[1], n1);
      Term body = canon(t.body(), env, used);
      env.resize(env.size() - 2);
      if (t.is(TermKind::Let)) return Term::let(n0, t.x_type(), n1, t.y_type(), scrut, body);
      return Term::brk(scrut, n0, n1, t.residue(), body);
    }
  }
  return t;
}

void count_occurrences(const Term& t, std::map<std::string, std::size_t>& counts) {
  if (t.is(TermKind::Var)) {
    ++counts[t.name()];
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) count_occurrences(t.child(i), counts);
}

}  // namespace

TypedVarSet free_vars(const Term& t) {
  std::vector<std::string> bound;
  TypedVarSet out;
  Path path;
  collect_free(t, bound, out, path);
  return out;
}

std::set<std::string> free_names(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free_names(t, bound, out);
  return out;
}

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  collect_all_names(t, out);
  return out;
}

bool occurs_free(const Term& t, std::string_view name) {
  switch (t.kind()) {
    case TermKind::Var: return t.name() == name;
    case TermKind::Lam: return t.binder() != name && occurs_free(t.body(), name);
    case TermKind::App:
    case TermKind::Pair: return occurs_free(t.child(0), name) || occurs_free(t.child(1), name);
    case TermKind::Let:
      return occurs_free(t.scrutinee(), name) || (t.x() != name && t.y() != name && occurs_free(t.body(), name));
    case TermKind::Break:
      return occurs_free(t.scrutinee(), name) || (t.phi() != name && t.f() != name && occurs_free(t.body(), name));
  }
  return false;
}

Term substitute(const Term& t, const Bindings& bindings) {
  Sigma sigma;
  std::set<std::string> range_fv;
  for (auto& [name, term] : bindings) {
    sigma.insert_or_assign(name, term);
    auto fv = free_names(term);
    range_fv.insert(fv.begin(), fv.end());
  }
  return subst(t, sigma, range_fv);
}

bool alpha_eq(const Term& a, const Term& b) {
  Env ea, eb;
  return alpha(a, b, ea, eb);
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < t.arity(); ++i) n += term_size(t.child(i));
  return n;
}

Term canonicalize(const Term& t) {
  Renames env;
  std::set<std::string> used = free_names(t);
  return canon(t, env, used);
}

bool affine_check(const Term& t) {
  std::map<std::string, std::size_t> counts;
  count_occurrences(canonicalize(t), counts);
  return std::all_of(counts.begin(), counts.end(), [](auto& kv) { return kv.second <= 1; });
}

Type type_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return t.type();
    case TermKind::Lam: return Type::arrow(t.binder_type(), type_of(t.body()));
    case TermKind::App: {
      Type f = type_of(t.fun());
      if (!f.is_arrow())
        throw TypeError(TypeError::Kind::TypeMismatch, {0}, "applying a term that is not a function", std::nullopt, f);
      return f.cod();
    }
    case TermKind::Pair: return Type::tensor(type_of(t.first()), type_of(t.second()));
    case TermKind::Let:
    case TermKind::Break: return type_of(t.body());
  }
  return t.type();
}

std::string fresh_name(std::string_view base, const std::set<std::string>& avoid) {
  std::string b(base);
  if (!avoid.contains(b)) return b;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = k <= 2 ? b + std::string(k, '\'') : b + std::to_string(k);
    if (!avoid.contains(candidate)) return candidate;
  }
}

const Term& subterm_at(const Term& t, const Path& path) {
  const Term* cur = &t;
  for (auto i : path) {
    if (i >= cur->arity()) throw Error("path " + format_path(path) + " does not address a subterm");
    cur = &cur->child(i);
  }
  return *cur;
}

Term replace_at(const Term& t, const Path& path, Term replacement) {
  if (path.empty()) return replacement;
  // Rebuild the spine bottom-up.
  std::vector<Term> spine{t};
  for (std::size_t d = 0; d + 1 < path.size(); ++d) {
    if (path[d] >= spine.back().arity()) throw Error("path " + format_path(path) + " does not address a subterm");
    spine.push_back(spine.back().child(path[d]));
  }
  Term cur = std::move(replacement);
  for (std::size_t d = path.size(); d-- > 0;) {
    if (path[d] >= spine[d].arity()) throw Error("path " + format_path(path) + " does not address a subterm");
    cur = spine[d].with_child(path[d], std::move(cur));
  }
  return cur;
}

}  // namespace bcalc
