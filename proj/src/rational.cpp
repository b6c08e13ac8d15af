#include "tcalg/rational.hpp"

#include <cctype>

#include "tcalg/errors.hpp"

namespace tcalg {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace tcalg
