#include "lexer.hpp"

#include <cctype>
#include <map>

namespace bcalc::detail {

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Backslash: return "'\\'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::At: return "'@'";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::Turnstile: return "'|-'";
    case Tok::KwLet: return "'let'";
    case Tok::KwIn: return "'in'";
    case Tok::KwBreak: return "'break'";
    case Tok::KwAs: return "'as'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  static const std::map<std::string, Tok, std::less<>> keywords{
      {"let", Tok::KwLet}, {"in", Tok::KwIn}, {"break", Tok::KwBreak}, {"as", Tok::KwAs}};

  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto emit = [&](Tok kind, std::size_t len) {
    SourceSpan span{i, i + len, line, col};
    out.push_back({kind, std::string(text.substr(i, len)), span});
    advance(len);
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      auto word = text.substr(i, j - i);
      auto kw = keywords.find(word);
      emit(kw == keywords.end() ? Tok::Ident : kw->second, j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      emit(Tok::Arrow, 2);
      continue;
    }
    if (c == '|' && i + 1 < text.size() && text[i + 1] == '-') {
      emit(Tok::Turnstile, 2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '\\': kind = Tok::Backslash; break;
      case ':': kind = Tok::Colon; break;
      case '.': kind = Tok::Dot; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '<': kind = Tok::LAngle; break;
      case '>': kind = Tok::RAngle; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      case '@': kind = Tok::At; break;
      case '*': kind = Tok::Star; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", SourceSpan{i, i + 1, line, col});
    }
    emit(kind, 1);
  }
  out.push_back({Tok::End, "", SourceSpan{i, i, line, col}});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t p = pos_ + ahead;
  return p < toks_.size() ? toks_[p] : toks_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept(Tok k) {
  if (!at(k)) return false;
  next();
  return true;
}

Token TokenStream::expect(Tok k) {
  if (!at(k)) fail("expected " + describe(k) + ", found " + describe(peek().kind), {describe(k)});
  return next();
}

void TokenStream::fail(const std::string& message, std::vector<std::string> expected) const {
  throw ParseError(message, peek().span, std::move(expected));
}

Type TokenStream::parse_type() {
  Type lhs = parse_tensor();
  if (accept(Tok::Arrow)) return Type::arrow(lhs, parse_type());
  return lhs;
}

Type TokenStream::parse_tensor() {
  Type lhs = parse_type_atom();
  while (accept(Tok::Star)) lhs = Type::tensor(lhs, parse_type_atom());
  return lhs;
}

Type TokenStream::parse_type_atom() {
  if (at(Tok::Ident)) return Type::atom(next().text);
  if (accept(Tok::LParen)) {
    Type t = parse_type();
    expect(Tok::RParen);
    return t;
  }
  fail("expected a type, found " + describe(peek().kind), {describe(Tok::Ident), describe(Tok::LParen)});
}

}  // namespace bcalc::detail
