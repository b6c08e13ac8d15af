#pragma once

// Expression grammar shared by every sub-language:
//
//   expr   := ['-'] tprod (('+' | '-') tprod)*
//   tprod  := term ('(x)' term)*
//   term   := factor (('*' | '.' | <juxtaposition>) factor)*
//   factor := atom ('^' (['-'] nat | atom))*
//   atom   := rational | ident | '(' expr ')' | call | 'a' '[' expr ']'
//           | '[' expr (',' expr)* ']' | '{' expr ',' expr '}'
//   call   := ident '(' expr (',' expr)* ')'
//
// Juxtaposition starts when a factor is followed by an identifier or '('.
// '^' followed by an atom is the wedge of differential forms.

#include <cstddef>
#include <string>
#include <vector>

#include "tcalg/confalg.hpp"
#include "tcalg/operad.hpp"

namespace tcalg::cli {

/// Fixed context every expression is validated against.
struct Session {
  std::size_t n = 1;
  std::size_t N = 1;
  BackendKind backend = BackendKind::CendWeyl;
  Variety variety = Variety::Free;
  /// Coefficient ring of z, w: rational, matrix, weyl or laurent.
  std::string ring = "rational";

  Backend conformal_backend() const { return Backend{backend, n, N}; }
};

struct Expr {
  enum class Kind {
    Number,
    Symbol,
    Neg,
    Add,
    Sub,
    Mul,
    Juxt,
    Dot,
    Tensor,
    Pow,
    Wedge,
    Call,
    Conformal,
    List,
    Poisson,
  };

  Kind kind = Kind::Number;
  /// Literal, identifier, exponent (Pow) or function name (Call).
  std::string text;
  std::vector<Expr> args;
  std::size_t line = 0;
  std::size_t column = 0;

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.args == b.args;
  }
};

/// Throws ParseError with the offending line and column for syntax errors,
/// unknown identifiers, wrong call arities and indices outside the session.
Expr parse(const std::string& source, const Session& session);

/// Canonical text with minimal parentheses; parse(format(e)) == e.
std::string format(const Expr& e);

/// Built-in functions and their arities (-1 for variadic, at least 2).
const std::vector<std::pair<std::string, int>>& builtin_functions();

}  // namespace tcalg::cli
