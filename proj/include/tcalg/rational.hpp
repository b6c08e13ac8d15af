#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace tcalg {

/// Exact scalar used everywhere in the library. Values are always kept in
/// canonical form (reduced fraction, positive denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// "p/q" or "p"; never a float.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

Rational factorial(std::uint64_t n);
Rational binomial(std::uint64_t n, std::uint64_t k);

/// Adds `coeff` to `terms[key]`, erasing the entry if it cancels. This is the
/// single place where the "no stored zero" invariant of every sparse type is
/// maintained.
template <class Key, class Compare>
void accumulate(std::map<Key, Rational, Compare>& terms, const Key& key, const Rational& coeff) {
  if (is_zero(coeff)) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) terms.erase(it);
  }
}

}  // namespace tcalg
