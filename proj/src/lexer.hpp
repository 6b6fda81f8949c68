#pragma once

// Shared tokenizer for the term, type and derivation syntaxes.

#include <string>
#include <string_view>
#include <vector>

#include "bcalc/error.hpp"
#include "bcalc/type.hpp"

namespace bcalc::detail {

enum class Tok {
  Ident,
  Backslash,
  Colon,
  Dot,
  LParen,
  RParen,
  LAngle,
  RAngle,
  LBracket,
  RBracket,
  Comma,
  Equals,
  At,
  Arrow,
  Star,
  Turnstile,
  KwLet,
  KwIn,
  KwBreak,
  KwAs,
  End,
};

std::string describe(Tok t);

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token stream with the shared type grammar:
///   type   := tensor ('->' type)?
///   tensor := atom ('*' atom)*
///   atom   := ident | '(' type ')'
class TokenStream {
public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  Token next();
  bool accept(Tok k);
  Token expect(Tok k);
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const;

  Type parse_type();

private:
  Type parse_tensor();
  Type parse_type_atom();

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace bcalc::detail
