#include "bcalc/parse.hpp"

#include <map>
#include <optional>
#include <vector>

#include "bcalc/error.hpp"
#include "bcalc/syntax.hpp"
#include "lexer.hpp"

namespace bcalc {

using detail::Tok;
using detail::TokenStream;

namespace {

// Parse tree with optional annotations, shared by the typed and untyped front ends.
struct Raw {
  TermKind kind;
  std::string name, name2;
  std::optional<Type> type, type2;  // Var: ascription; binders: annotations
  std::vector<Raw> kids;
  SourceSpan span;
};

class RawParser {
public:
  explicit RawParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  Raw parse_all() {
    Raw t = parse_term();
    if (!ts_.at(Tok::End)) ts_.fail("unexpected " + detail::describe(ts_.peek().kind) + " after term");
    return t;
  }

private:
  bool at_binder_form() const { return ts_.at(Tok::Backslash) || ts_.at(Tok::KwLet) || ts_.at(Tok::KwBreak); }
  bool at_atom() const { return ts_.at(Tok::Ident) || ts_.at(Tok::LParen) || ts_.at(Tok::LAngle); }

  std::optional<Type> optional_annotation(Tok marker) {
    if (ts_.accept(marker)) return ts_.parse_type();
    return std::nullopt;
  }

  Raw parse_term() {
    SourceSpan start = ts_.peek().span;
    if (ts_.accept(Tok::Backslash)) {
      Raw r{TermKind::Lam, ts_.expect(Tok::Ident).text, {}, std::nullopt, std::nullopt, {}, start};
      r.type = optional_annotation(Tok::Colon);
      ts_.expect(Tok::Dot);
      r.kids.push_back(parse_term());
      return r;
    }
    if (ts_.accept(Tok::KwLet)) {
      Raw r{TermKind::Let, {}, {}, std::nullopt, std::nullopt, {}, start};
      ts_.expect(Tok::LAngle);
      r.name = ts_.expect(Tok::Ident).text;
      r.type = optional_annotation(Tok::Colon);
      ts_.expect(Tok::Comma);
      auto second = ts_.peek().span;
      r.name2 = ts_.expect(Tok::Ident).text;
      if (r.name2 == r.name) throw ParseError("let binds '" + r.name + "' twice", second);
      r.type2 = optional_annotation(Tok::Colon);
      ts_.expect(Tok::RAngle);
      ts_.expect(Tok::Equals);
      r.kids.push_back(parse_term());
      ts_.expect(Tok::KwIn);
      r.kids.push_back(parse_term());
      return r;
    }
    if (ts_.accept(Tok::KwBreak)) {
      Raw r{TermKind::Break, {}, {}, std::nullopt, std::nullopt, {}, start};
      r.kids.push_back(parse_term());
      ts_.expect(Tok::KwAs);
      ts_.expect(Tok::LAngle);
      r.name = ts_.expect(Tok::Ident).text;
      ts_.expect(Tok::Comma);
      auto second = ts_.peek().span;
      r.name2 = ts_.expect(Tok::Ident).text;
      if (r.name2 == r.name) throw ParseError("break binds '" + r.name + "' twice", second);
      ts_.expect(Tok::RAngle);
      r.type = optional_annotation(Tok::At);
      ts_.expect(Tok::KwIn);
      r.kids.push_back(parse_term());
      return r;
    }
    return parse_app();
  }

  Raw parse_app() {
    Raw head = parse_atom();
    for (;;) {
      if (at_atom()) {
        Raw arg = parse_atom();
        head = make_app(std::move(head), std::move(arg));
      } else if (at_binder_form()) {
        Raw arg = parse_term();
        return make_app(std::move(head), std::move(arg));
      } else {
        return head;
      }
    }
  }

  static Raw make_app(Raw f, Raw a) {
    Raw r{TermKind::App, {}, {}, std::nullopt, std::nullopt, {}, f.span};
    r.kids.push_back(std::move(f));
    r.kids.push_back(std::move(a));
    return r;
  }

  Raw parse_atom() {
    SourceSpan start = ts_.peek().span;
    if (ts_.at(Tok::Ident)) return Raw{TermKind::Var, ts_.next().text, {}, std::nullopt, std::nullopt, {}, start};
    if (ts_.accept(Tok::LParen)) {
      if (ts_.at(Tok::Ident) && ts_.at(Tok::Colon, 1)) {
        Raw r{TermKind::Var, ts_.next().text, {}, std::nullopt, std::nullopt, {}, start};
        ts_.expect(Tok::Colon);
        r.type = ts_.parse_type();
        ts_.expect(Tok::RParen);
        return r;
      }
      Raw inner = parse_term();
      ts_.expect(Tok::RParen);
      return inner;
    }
    if (ts_.accept(Tok::LAngle)) {
      Raw r{TermKind::Pair, {}, {}, std::nullopt, std::nullopt, {}, start};
      r.kids.push_back(parse_term());
      ts_.expect(Tok::Comma);
      r.kids.push_back(parse_term());
      ts_.expect(Tok::RAngle);
      return r;
    }
    ts_.fail("expected a term, found " + detail::describe(ts_.peek().kind),
             {detail::describe(Tok::Ident), detail::describe(Tok::LParen), detail::describe(Tok::LAngle),
              detail::describe(Tok::Backslash), detail::describe(Tok::KwLet), detail::describe(Tok::KwBreak)});
  }

  TokenStream ts_;
};

class Elaborator {
public:
  Term elaborate(const Raw& r) {
    switch (r.kind) {
      case TermKind::Var: return variable(r);
      case TermKind::Lam: {
        Type a = required(r.type, r, "binder " + r.name);
        scopes_.emplace_back(r.name, a);
        Term body = elaborate(r.kids[0]);
        scopes_.pop_back();
        return Term::lam(r.name, a, body);
      }
      case TermKind::App: {
        Term f = elaborate(r.kids[0]);
        return Term::app(f, elaborate(r.kids[1]));
      }
      case TermKind::Pair: {
        Term a = elaborate(r.kids[0]);
        return Term::pair(a, elaborate(r.kids[1]));
      }
      case TermKind::Let: {
        Type xt = required(r.type, r, "binder " + r.name);
        Type yt = required(r.type2, r, "binder " + r.name2);
        Term scrut = elaborate(r.kids[0]);
        scopes_.emplace_back(r.name, xt);
        scopes_.emplace_back(r.name2, yt);
        Term body = elaborate(r.kids[1]);
        scopes_.pop_back();
        scopes_.pop_back();
        return Term::let(r.name, xt, r.name2, yt, scrut, body);
      }
      case TermKind::Break: {
        Type residue = required(r.type, r, "break residue");
        Term scrut = elaborate(r.kids[0]);
        auto [k, s] = ks_types(type_of(scrut), residue);
        scopes_.emplace_back(r.name, k);
        scopes_.emplace_back(r.name2, s);
        Term body = elaborate(r.kids[1]);
        scopes_.pop_back();
        scopes_.pop_back();
        return Term::brk(scrut, r.name, r.name2, residue, body);
      }
    }
    throw ParseError("unknown term", r.span);
  }

private:
  static Type required(const std::optional<Type>& t, const Raw& r, const std::string& what) {
    if (!t) throw ParseError(what + " needs a type annotation", r.span);
    return *t;
  }

  Term variable(const Raw& r) {
    for (std::size_t i = scopes_.size(); i-- > 0;) {
      if (scopes_[i].first != r.name) continue;
      if (r.type && !(*r.type == scopes_[i].second))
        throw ParseError("ascription on bound variable " + r.name + " disagrees with its binder", r.span);
      return Term::var(r.name, scopes_[i].second);
    }
    auto it = free_.find(r.name);
    if (r.type) {
      if (it != free_.end() && !(it->second == *r.type))
        throw ParseError("free variable " + r.name + " ascribed two different types", r.span);
      free_.emplace(r.name, *r.type);
      return Term::var(r.name, *r.type);
    }
    if (it == free_.end()) throw ParseError("free variable " + r.name + " needs a type ascription (" + r.name + " : T)", r.span);
    return Term::var(r.name, it->second);
  }

  std::vector<std::pair<std::string, Type>> scopes_;
  std::map<std::string, Type> free_;
};

UntypedTerm strip(const Raw& r) {
  UntypedTerm u{r.kind, r.name, r.name2, {}};
  for (auto& k : r.kids) u.children.push_back(strip(k));
  return u;
}

}  // namespace

Type parse_type(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  Type t = ts.parse_type();
  if (!ts.at(Tok::End)) ts.fail("unexpected " + detail::describe(ts.peek().kind) + " after type");
  return t;
}

Term parse_term(std::string_view text) {
  Raw raw = RawParser(text).parse_all();
  Elaborator e;
  return canonicalize(e.elaborate(raw));
}

UntypedTerm parse_untyped_term(std::string_view text) { return strip(RawParser(text).parse_all()); }

}  // namespace bcalc
