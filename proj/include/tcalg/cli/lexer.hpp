#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tcalg::cli {

enum class TokenKind {
  Number,  // 12 or 3/4
  Ident,
  Plus,
  Minus,
  Star,
  Caret,
  Dot,
  Comma,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Tensor,  // (x)
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string token_name(TokenKind k);

/// Throws ParseError on characters outside the grammar.
std::vector<Token> tokenize(const std::string& source);

}  // namespace tcalg::cli
