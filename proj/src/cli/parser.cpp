#include "tcalg/cli/parser.hpp"

#include <algorithm>

#include "tcalg/cli/lexer.hpp"
#include "tcalg/errors.hpp"

namespace tcalg::cli {

const std::vector<std::pair<std::string, int>>& builtin_functions() {
  static const std::vector<std::pair<std::string, int>> fns{
      {"fprod", 3}, {"xprod", 3},   {"nprod", 3}, {"res", 3},     {"dz", 1},       {"eval", 2},
      {"S", 1},     {"Delta", 1},   {"eps", 1},   {"sigma", 1},   {"skew", 1},     {"sym", 1},
      {"div", 1},   {"ham", 1},     {"apply", 2}, {"ext_d", 1},   {"contract", 1}, {"compose", -1},
  };
  return fns;
}

namespace {

int function_arity(const std::string& name) {
  for (const auto& [f, a] : builtin_functions())
    if (f == name) return a;
  return 0;
}

// Parses "<prefix><digits>" and returns the index, or 0 if the shape differs.
std::size_t indexed(const std::string& id, const std::string& prefix) {
  if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return 0;
  std::string digits = id.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(), ::isdigit) || digits[0] == '0' || digits.size() > 6) return 0;
  return std::stoul(digits);
}

class Parser {
 public:
  Parser(const std::string& src, const Session& s) : toks_(tokenize(src)), s_(s) {}

  Expr run() {
    Expr e = expr();
    if (peek().kind != TokenKind::End) fail("unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what, const Token& at) const { throw ParseError(what, at.line, at.column); }
  [[noreturn]] void fail(const std::string& what) const { fail(what, peek()); }
  void expect(TokenKind k) {
    if (!accept(k)) fail("expected " + token_name(k) + ", found " + describe(peek()));
  }
  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::Number || t.kind == TokenKind::Ident) return token_name(t.kind) + " '" + t.text + "'";
    return token_name(t.kind);
  }

  static Expr node(Expr::Kind k, const Token& at, std::vector<Expr> args = {}, std::string text = "") {
    Expr e;
    e.kind = k;
    e.text = std::move(text);
    e.args = std::move(args);
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  Expr expr() {
    Token at = peek();
    Expr e = accept(TokenKind::Minus) ? node(Expr::Kind::Neg, at, {tprod()}) : tprod();
    for (;;) {
      Token op = peek();
      if (accept(TokenKind::Plus))
        e = node(Expr::Kind::Add, op, {std::move(e), tprod()});
      else if (accept(TokenKind::Minus))
        e = node(Expr::Kind::Sub, op, {std::move(e), tprod()});
      else
        return e;
    }
  }

  Expr tprod() {
    Expr e = term();
    for (Token op = peek(); accept(TokenKind::Tensor); op = peek()) e = node(Expr::Kind::Tensor, op, {std::move(e), term()});
    return e;
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      Token op = peek();
      if (accept(TokenKind::Star))
        e = node(Expr::Kind::Mul, op, {std::move(e), factor()});
      else if (accept(TokenKind::Dot))
        e = node(Expr::Kind::Dot, op, {std::move(e), factor()});
      else if (op.kind == TokenKind::Ident || op.kind == TokenKind::LParen)
        e = node(Expr::Kind::Juxt, op, {std::move(e), factor()});
      else
        return e;
    }
  }

  Expr factor() {
    Expr e = atom();
    for (Token op = peek(); accept(TokenKind::Caret); op = peek()) {
      if (peek().kind == TokenKind::Number || peek().kind == TokenKind::Minus) {
        std::string exp = accept(TokenKind::Minus) ? "-" : "";
        Token num = peek();
        if (num.kind != TokenKind::Number || num.text.find('/') != std::string::npos)
          fail("exponent must be an integer, found " + describe(num));
        take();
        e = node(Expr::Kind::Pow, op, {std::move(e)}, exp + num.text);
      } else {
        e = node(Expr::Kind::Wedge, op, {std::move(e), atom()});
      }
    }
    return e;
  }

  std::vector<Expr> comma_list(TokenKind close) {
    std::vector<Expr> out{expr()};
    while (accept(TokenKind::Comma)) out.push_back(expr());
    expect(close);
    return out;
  }

  Expr atom() {
    Token t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        take();
        if (auto slash = t.text.find('/');
            slash != std::string::npos && t.text.find_first_not_of('0', slash + 1) == std::string::npos)
          fail("zero denominator", t);
        return node(Expr::Kind::Number, t, {}, t.text);
      case TokenKind::LParen: {
        take();
        Expr e = expr();
        expect(TokenKind::RParen);
        return e;
      }
      case TokenKind::LBracket:
        take();
        return node(Expr::Kind::List, t, comma_list(TokenKind::RBracket));
      case TokenKind::LBrace: {
        take();
        auto args = comma_list(TokenKind::RBrace);
        if (args.size() != 2) fail("{f, g} takes two arguments", t);
        return node(Expr::Kind::Poisson, t, std::move(args));
      }
      case TokenKind::Ident:
        return identifier();
      default:
        fail("unexpected " + describe(t));
    }
  }

  Expr identifier() {
    Token t = take();
    const std::string& id = t.text;
    if (id == "a") {
      if (peek().kind != TokenKind::LBracket) fail("'a' must be followed by '[...]'", t);
      take();
      Expr inner = expr();
      expect(TokenKind::RBracket);
      return node(Expr::Kind::Conformal, t, {std::move(inner)});
    }
    if (int arity = function_arity(id)) {
      if (peek().kind != TokenKind::LParen) fail("function " + id + " needs arguments", t);
      take();
      auto args = comma_list(TokenKind::RParen);
      if (arity > 0 && args.size() != static_cast<std::size_t>(arity))
        fail(id + " takes " + std::to_string(arity) + " argument" + (arity > 1 ? "s" : "") + ", got " +
                 std::to_string(args.size()),
             t);
      if (arity < 0 && args.size() < 2) fail(id + " takes at least 2 arguments", t);
      return node(Expr::Kind::Call, t, std::move(args), id);
    }
    check_symbol(t);
    return node(Expr::Kind::Symbol, t, {}, id);
  }

  void check_symbol(const Token& t) const {
    const std::string& id = t.text;
    if (id == "z" || id == "w" || id == "t") return;
    if (indexed(id, "x")) return;
    for (const char* prefix : {"dT", "T", "t", "p", "q", "d"}) {
      std::size_t i = indexed(id, prefix);
      if (!i) continue;
      if (i > s_.n)
        fail(id + " is outside the session's " + std::to_string(s_.n) + " variable" + (s_.n == 1 ? "" : "s"), t);
      return;
    }
    fail("unknown identifier '" + id + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Session& s_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Neg:
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Tensor: return 2;
    case Expr::Kind::Mul:
    case Expr::Kind::Juxt:
    case Expr::Kind::Dot: return 3;
    case Expr::Kind::Pow:
    case Expr::Kind::Wedge: return 4;
    default: return 5;
  }
}

std::string fmt(const Expr& e, int min_prec);

std::string join_args(const std::vector<Expr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + fmt(args[i], 1);
  return out;
}

std::string fmt_unwrapped(const Expr& e) {
  auto bin = [&](const char* op, int p) { return fmt(e.args[0], p) + op + fmt(e.args[1], p + 1); };
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Symbol: return e.text;
    case Expr::Kind::Neg: return "-" + fmt(e.args[0], 2);
    case Expr::Kind::Add: return bin(" + ", 1);
    case Expr::Kind::Sub: return bin(" - ", 1);
    case Expr::Kind::Tensor: return bin(" (x) ", 2);
    case Expr::Kind::Mul: return bin("*", 3);
    case Expr::Kind::Dot: return bin(" . ", 3);
    case Expr::Kind::Juxt: {
      std::string rhs = fmt(e.args[1], 4);
      // Juxtaposition only resumes at an identifier or '('.
      if (!(std::isalpha(static_cast<unsigned char>(rhs[0])) || rhs[0] == '_' || rhs[0] == '(')) rhs = "(" + rhs + ")";
      return fmt(e.args[0], 3) + " " + rhs;
    }
    case Expr::Kind::Pow: return fmt(e.args[0], 5) + "^" + e.text;
    case Expr::Kind::Wedge: return fmt(e.args[0], 4) + "^" + fmt(e.args[1], 5);
    case Expr::Kind::Call: return e.text + "(" + join_args(e.args) + ")";
    case Expr::Kind::Conformal: return "a[" + fmt(e.args[0], 1) + "]";
    case Expr::Kind::List: return "[" + join_args(e.args) + "]";
    case Expr::Kind::Poisson: return "{" + join_args(e.args) + "}";
  }
  return "";
}

std::string fmt(const Expr& e, int min_prec) {
  std::string s = fmt_unwrapped(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expr parse(const std::string& source, const Session& session) { return Parser(source, session).run(); }

std::string format(const Expr& e) { return fmt(e, 1); }

}  // namespace tcalg::cli
