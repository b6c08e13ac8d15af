#include "tcalg/fdist.hpp"

#include <vector>

#include "tcalg/text.hpp"

namespace tcalg {

LaurentPoly LaurentPoly::monomial(long k, const Rational& c) {
  LaurentPoly out;
  out.add_term(k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [j, x] : a.terms_)
    for (const auto& [k, y] : b.terms_) out.add_term(j + k, x * y);
  return out;
}

std::string LaurentPoly::to_string() const {
  std::vector<text::Term> terms;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) terms.push_back({it->second, detail::power_string("t", it->first)});
  return text::join(terms);
}

namespace detail {

std::string power_string(const std::string& var, long k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

std::string scaled_monomial(const std::string& coeff, const std::string& monomial) {
  if (monomial.empty()) return coeff;
  if (coeff == "1") return monomial;
  if (coeff == "-1") return "-" + monomial;
  return text::parenthesize_sum(coeff) + "*" + monomial;
}

std::string join_summands(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string p = text::parenthesize_sum(parts[i]);
    if (p[0] == '-')
      out += " - " + p.substr(1);
    else
      out += " + " + p;
  }
  return out;
}

}  // namespace detail

}  // namespace tcalg
