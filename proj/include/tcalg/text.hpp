#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcalg/rational.hpp"

namespace tcalg::text {

/// One summand: a rational coefficient and the rendered monomial (empty for
/// the constant monomial).
struct Term {
  Rational coeff;
  std::string body;
};

/// `3*T1^2*T2 - 1/2`; "0" for an empty sum. Coefficients of +-1 are elided
/// unless the body is empty.
std::string join(const std::vector<Term>& terms);

/// Wraps `s` in parentheses when it contains a top-level '+' or '-' after the
/// first character.
std::string parenthesize_sum(const std::string& s);

}  // namespace tcalg::text
