#include "tcalg/cli/lexer.hpp"

#include <cctype>

#include "tcalg/errors.hpp"

namespace tcalg::cli {

std::string token_name(TokenKind k) {
  switch (k) {
    case TokenKind::Number: return "number";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Comma: return "','";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Tensor: return "'(x)'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{TokenKind::End, "", line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      t.kind = TokenKind::Number;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = TokenKind::Ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (s.compare(i, 3, "(x)") == 0) {
      t.kind = TokenKind::Tensor;
      t.text = "(x)";
      advance(3);
    } else {
      switch (c) {
        case '+': t.kind = TokenKind::Plus; break;
        case '-': t.kind = TokenKind::Minus; break;
        case '*': t.kind = TokenKind::Star; break;
        case '^': t.kind = TokenKind::Caret; break;
        case '.': t.kind = TokenKind::Dot; break;
        case ',': t.kind = TokenKind::Comma; break;
        case '(': t.kind = TokenKind::LParen; break;
        case ')': t.kind = TokenKind::RParen; break;
        case '[': t.kind = TokenKind::LBracket; break;
        case ']': t.kind = TokenKind::RBracket; break;
        case '{': t.kind = TokenKind::LBrace; break;
        case '}': t.kind = TokenKind::RBrace; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

}  // namespace tcalg::cli
