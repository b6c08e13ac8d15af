#pragma once

// Finitely supported formal distributions a(z) = sum_k a_k z^k over a
// coefficient ring, and the residue n-products
//   (a_(n) b)(z) = Res_w a(w) b(z) (w - z)^n.
//
// Coefficients are stored by the exponent of z itself. The formal delta
// function is not finitely supported, so a pair is local only when
// a(w) b(z) already vanishes; locality_test reports exactly that.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tcalg/check.hpp"
#include "tcalg/rat_matrix.hpp"
#include "tcalg/rational.hpp"
#include "tcalg/weyl.hpp"

namespace tcalg {

/// Laurent polynomial in one commuting variable t.
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  static LaurentPoly monomial(long k, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(long k, const Rational& c) { accumulate(terms_, k, c); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// `t^-1 + 2*t`, descending exponents.
  std::string to_string() const;

 private:
  Terms terms_;
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static bool is_zero(const Rational& r) { return tcalg::is_zero(r); }
  static std::string to_string(const Rational& r) { return tcalg::to_string(r); }
};

template <>
struct RingTraits<RatMatrix> {
  static bool is_zero(const RatMatrix& r) { return r.is_zero(); }
  static std::string to_string(const RatMatrix& r) { return r.to_string(); }
};

template <>
struct RingTraits<WeylElement> {
  static bool is_zero(const WeylElement& r) { return r.is_zero(); }
  static std::string to_string(const WeylElement& r) { return r.to_string(); }
};

template <>
struct RingTraits<LaurentPoly> {
  static bool is_zero(const LaurentPoly& r) { return r.is_zero(); }
  static std::string to_string(const LaurentPoly& r) { return r.to_string(); }
};

namespace detail {

template <class Key, class R>
void add_coeff(std::map<Key, R>& m, const Key& k, const R& c) {
  if (RingTraits<R>::is_zero(c)) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second = it->second + c;
    if (RingTraits<R>::is_zero(it->second)) m.erase(it);
  }
}

/// Renders `coeff*monomial`, eliding a unit coefficient and parenthesizing
/// sums.
std::string scaled_monomial(const std::string& coeff, const std::string& monomial);
/// Joins rendered summands, turning a leading '-' into a binary minus.
std::string join_summands(const std::vector<std::string>& parts);
std::string power_string(const std::string& var, long k);

}  // namespace detail

template <class R>
class FormalDistribution {
 public:
  using Coeffs = std::map<long, R>;

  FormalDistribution() = default;
  static FormalDistribution monomial(long k, const R& c) {
    FormalDistribution out;
    out.add_term(k, c);
    return out;
  }

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add_term(long k, const R& c) { detail::add_coeff(coeffs_, k, c); }
  std::optional<R> coefficient(long k) const {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) return std::nullopt;
    return it->second;
  }

  FormalDistribution& operator+=(const FormalDistribution& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
  }
  FormalDistribution& operator*=(const Rational& s) {
    Coeffs out;
    for (const auto& [k, c] : coeffs_) detail::add_coeff(out, k, R(c * s));
    coeffs_ = std::move(out);
    return *this;
  }
  friend FormalDistribution operator+(FormalDistribution a, const FormalDistribution& b) { return a += b; }
  friend FormalDistribution operator*(FormalDistribution a, const Rational& s) { return a *= s; }
  friend FormalDistribution operator-(const FormalDistribution& a, const FormalDistribution& b) {
    return a + b * Rational(-1);
  }
  friend bool operator==(const FormalDistribution&, const FormalDistribution&) = default;

  /// `r*z^-1 + s*z^2`, ascending exponents.
  std::string to_string(const std::string& var = "z") const {
    std::vector<std::string> parts;
    for (const auto& [k, c] : coeffs_)
      parts.push_back(detail::scaled_monomial(RingTraits<R>::to_string(c), detail::power_string(var, k)));
    return detail::join_summands(parts);
  }

 private:
  Coeffs coeffs_;
};

/// Coefficients of w^j z^k.
template <class R>
class BiDistribution {
 public:
  using Key = std::pair<long, long>;
  using Coeffs = std::map<Key, R>;

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add_term(long j, long k, const R& c) { detail::add_coeff(coeffs_, Key{j, k}, c); }
  friend bool operator==(const BiDistribution&, const BiDistribution&) = default;

  std::string to_string() const {
    std::vector<std::string> parts;
    for (const auto& [jk, c] : coeffs_) {
      std::string w = detail::power_string("w", jk.first), z = detail::power_string("z", jk.second);
      std::string mono = w.empty() ? z : (z.empty() ? w : w + "*" + z);
      parts.push_back(detail::scaled_monomial(RingTraits<R>::to_string(c), mono));
    }
    return detail::join_summands(parts);
  }

 private:
  Coeffs coeffs_;
};

template <class R>
BiDistribution<R> outer_product(const FormalDistribution<R>& a, const FormalDistribution<R>& b) {
  BiDistribution<R> out;
  for (const auto& [j, x] : a.coeffs())
    for (const auto& [k, y] : b.coeffs()) out.add_term(j, k, R(x * y));
  return out;
}

/// x(w, z) (w - z)^n.
template <class R>
BiDistribution<R> mul_wz_power(const BiDistribution<R>& x, unsigned n) {
  BiDistribution<R> out;
  for (const auto& [jk, c] : x.coeffs())
    for (unsigned i = 0; i <= n; ++i) {
      Rational s = binomial(n, i) * (i % 2 ? Rational(-1) : Rational(1));
      out.add_term(jk.first + static_cast<long>(n - i), jk.second + static_cast<long>(i), R(c * s));
    }
  return out;
}

/// Coefficient of w^-1.
template <class R>
FormalDistribution<R> residue_w(const BiDistribution<R>& x) {
  FormalDistribution<R> out;
  for (const auto& [jk, c] : x.coeffs())
    if (jk.first == -1) out.add_term(jk.second, c);
  return out;
}

template <class R>
FormalDistribution<R> nproduct_res(const FormalDistribution<R>& a, const FormalDistribution<R>& b, unsigned n) {
  return residue_w(mul_wz_power(outer_product(a, b), n));
}

template <class R>
FormalDistribution<R> derivative_z(const FormalDistribution<R>& a) {
  FormalDistribution<R> out;
  for (const auto& [k, c] : a.coeffs())
    if (k != 0) out.add_term(k - 1, R(c * Rational(k)));
  return out;
}

/// Either local with N = 0, or the leading coefficient (largest w-power, then
/// largest z-power) of a(w) b(z), which survives every multiplication by
/// (w - z)^N at position (j + N, k).
template <class R>
struct LocalityResult {
  bool local = true;
  std::optional<std::pair<long, long>> position;
  std::optional<R> coefficient;
};

template <class R>
LocalityResult<R> locality_test(const FormalDistribution<R>& a, const FormalDistribution<R>& b) {
  BiDistribution<R> x = outer_product(a, b);
  LocalityResult<R> r;
  if (x.is_zero()) return r;
  const auto& [jk, c] = *x.coeffs().rbegin();
  r.local = false;
  r.position = jk;
  r.coefficient = c;
  return r;
}

/// T a_(n) b = -n a_(n-1) b, with the right side 0 at n = 0.
template <class R>
CheckResult check_C2_res(const FormalDistribution<R>& a, const FormalDistribution<R>& b, unsigned n) {
  FormalDistribution<R> lhs = nproduct_res(derivative_z(a), b, n);
  FormalDistribution<R> rhs;
  if (n > 0) rhs = nproduct_res(a, b, n - 1) * Rational(-static_cast<long>(n));
  CheckResult r{"T a_(n) b = -n a_(n-1) b", lhs == rhs, ""};
  if (!r.passed) r.certificate = "n = " + std::to_string(n) + ": lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
  return r;
}

/// a_(n) T b = T(a_(n) b) + n a_(n-1) b.
template <class R>
CheckResult check_C3_res(const FormalDistribution<R>& a, const FormalDistribution<R>& b, unsigned n) {
  FormalDistribution<R> lhs = nproduct_res(a, derivative_z(b), n);
  FormalDistribution<R> rhs = derivative_z(nproduct_res(a, b, n));
  if (n > 0) rhs += nproduct_res(a, b, n - 1) * Rational(n);
  CheckResult r{"a_(n) T b = T(a_(n) b) + n a_(n-1) b", lhs == rhs, ""};
  if (!r.passed) r.certificate = "n = " + std::to_string(n) + ": lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
  return r;
}

}  // namespace tcalg
