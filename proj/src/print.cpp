#include "bcalc/print.hpp"

#include <set>
#include <vector>

#include "bcalc/syntax.hpp"

namespace bcalc {

namespace {

void type_into(const Type& t, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::Atom: out += t.name(); return;
    case Type::Kind::Arrow:
      if (t.dom().is_arrow()) {
        out += '(';
        type_into(t.dom(), out);
        out += ')';
      } else {
        type_into(t.dom(), out);
      }
      out += " -> ";
      type_into(t.cod(), out);
      return;
    case Type::Kind::Tensor: {
      auto factor = [&](const Type& f, bool right) {
        bool parens = f.is_arrow() || (right && f.is_tensor());
        if (parens) out += '(';
        type_into(f, out);
        if (parens) out += ')';
      };
      factor(t.left(), false);
      out += " * ";
      factor(t.right(), true);
      return;
    }
  }
}

// `tail` is true where a binder form may be printed without parentheses: at
// the top, inside brackets and in binder bodies.
class TermPrinter {
public:
  std::string run(const Term& t) {
    term(t, true);
    return std::move(out_);
  }

private:
  void term(const Term& t, bool tail) {
    switch (t.kind()) {
      case TermKind::Var: variable(t); return;
      case TermKind::Pair:
        out_ += '<';
        term(t.first(), true);
        out_ += ", ";
        term(t.second(), true);
        out_ += '>';
        return;
      case TermKind::App:
        head(t.fun());
        out_ += ' ';
        if (t.arg().is(TermKind::App)) {
          out_ += '(';
          term(t.arg(), true);
          out_ += ')';
        } else {
          term(t.arg(), false);
        }
        return;
      default:
        if (!tail) out_ += '(';
        binder_form(t);
        if (!tail) out_ += ')';
        return;
    }
  }

  void head(const Term& f) { term(f, false); }

  void binder_form(const Term& t) {
    switch (t.kind()) {
      case TermKind::Lam:
        out_ += '\\';
        out_ += t.binder();
        out_ += ':';
        out_ += print_type(t.binder_type());
        out_ += ". ";
        bound_.push_back(t.binder());
        term(t.body(), true);
        bound_.pop_back();
        return;
      case TermKind::Let:
        out_ += "let <" + t.x() + ":" + print_type(t.x_type()) + ", " + t.y() + ":" + print_type(t.y_type()) + "> = ";
        term(t.scrutinee(), false);
        out_ += " in ";
        bound_.push_back(t.x());
        bound_.push_back(t.y());
        term(t.body(), true);
        bound_.resize(bound_.size() - 2);
        return;
      case TermKind::Break:
        out_ += "break ";
        term(t.scrutinee(), false);
        out_ += " as <" + t.phi() + ", " + t.f() + "> @ " + print_type(t.residue()) + " in ";
        bound_.push_back(t.phi());
        bound_.push_back(t.f());
        term(t.body(), true);
        bound_.resize(bound_.size() - 2);
        return;
      default: return;
    }
  }

  void variable(const Term& t) {
    bool bound = false;
    for (auto& b : bound_) bound = bound || b == t.name();
    if (!bound && ascribed_.insert(t.name()).second) {
      out_ += "(" + t.name() + " : " + print_type(t.type()) + ")";
    } else {
      out_ += t.name();
    }
  }

  std::string out_;
  std::vector<std::string> bound_;
  std::set<std::string> ascribed_;
};

void untyped_into(const UntypedTerm& t, bool tail, std::string& out) {
  switch (t.kind) {
    case TermKind::Var: out += t.name; return;
    case TermKind::Pair:
      out += '<';
      untyped_into(t.children[0], true, out);
      out += ", ";
      untyped_into(t.children[1], true, out);
      out += '>';
      return;
    case TermKind::App: {
      const auto& f = t.children[0];
      untyped_into(f, false, out);
      out += ' ';
      const auto& a = t.children[1];
      if (a.kind == TermKind::App) {
        out += '(';
        untyped_into(a, true, out);
        out += ')';
      } else {
        untyped_into(a, false, out);
      }
      return;
    }
    default: break;
  }
  if (!tail) out += '(';
  if (t.kind == TermKind::Lam) {
    out += "\\" + t.name + ". ";
    untyped_into(t.children[0], true, out);
  } else if (t.kind == TermKind::Let) {
    out += "let <" + t.name + ", " + t.name2 + "> = ";
    untyped_into(t.children[0], false, out);
    out += " in ";
    untyped_into(t.children[1], true, out);
  } else {
    out += "break ";
    untyped_into(t.children[0], false, out);
    out += " as <" + t.name + ", " + t.name2 + "> in ";
    untyped_into(t.children[1], true, out);
  }
  if (!tail) out += ')';
}

}  // namespace

std::string print_type(const Type& t) {
  std::string out;
  type_into(t, out);
  return out;
}

std::string print_term(const Term& t) { return TermPrinter().run(canonicalize(t)); }

std::string print_untyped(const UntypedTerm& t) {
  std::string out;
  untyped_into(t, true, out);
  return out;
}

}  // namespace bcalc
