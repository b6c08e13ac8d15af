#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tcalg/cli/parser.hpp"
#include "tcalg/confalg.hpp"
#include "tcalg/fdist.hpp"
#include "tcalg/hopf.hpp"
#include "tcalg/operad.hpp"
#include "tcalg/rat_matrix.hpp"
#include "tcalg/structures.hpp"
#include "tcalg/weyl.hpp"

namespace tcalg::cli {

/// A value of a Cur element: stored with T_i as q_i, printed with T.
struct CurValue {
  Backend backend;
  MatWeyl value;
  friend bool operator==(const CurValue&, const CurValue&) = default;
};

/// Linear combination of (possibly partial) words in x_1, x_2, ...; turned
/// into an OperadElt of the session's variety when printed.
struct OperadWords {
  std::map<OperadElt::Word, Rational> terms;
  friend bool operator==(const OperadWords&, const OperadWords&) = default;
};

/// Distributions in z and w share one representation: coefficients of
/// w^j z^k.
template <class R>
struct Dist {
  BiDistribution<R> d;
  friend bool operator==(const Dist&, const Dist&) = default;
};

using Value = std::variant<Rational, HPoly, HTensor, DualPoly, WeylElement, MatWeyl, RatMatrix, LaurentPoly,
                           ConformalElement, CurValue, Dist<Rational>, Dist<RatMatrix>, Dist<WeylElement>,
                           Dist<LaurentPoly>, OperadWords, PolyDerivation, DifferentialForm>;

/// Short type tag: rational, hpoly, tensor, dual, weyl, weyl-matrix, matrix,
/// laurent, conformal, cur-value, distribution, operad, derivation, form.
std::string type_name(const Value& v);

/// Evaluates a parsed expression. Domain errors surface as tcalg::Error
/// subclasses; type errors as TypeMismatch. Both carry the source position.
Value evaluate(const Expr& e, const Session& s);
Value evaluate(const std::string& source, const Session& s);

/// Canonical text of a value; re-parsing and evaluating it gives the same
/// text back.
std::string format_value(const Value& v, const Session& s);

/// locality_test on two distributions in z over the same ring; the
/// certificate names the last nonzero term of a(w) b(z).
struct DistLocality {
  bool local = true;
  std::string certificate;
};
DistLocality distribution_locality(const Value& a, const Value& b);

/// The operad element behind a word combination (zero if empty).
OperadElt to_operad(const OperadWords& w, Variety v);
OperadWords from_operad(const OperadElt& f);

}  // namespace tcalg::cli
