#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tcalg/rational.hpp"

namespace tcalg {

/// Exponent vector of a monomial T1^a1 ... Tn^an. The length is the number of
/// variables of the session and never changes after construction.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static MultiIndex zero(std::size_t n) { return MultiIndex(n); }
  /// e_i, with i zero-based.
  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  std::uint64_t degree() const;
  bool is_zero() const { return degree() == 0; }

  /// Componentwise order.
  bool leq(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; nullopt when other is not <= *this.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;

  Rational factorial() const;
  /// (alpha)_gamma = prod alpha_i! / (alpha_i - gamma_i)!, zero unless gamma <= alpha.
  Rational falling_factorial(const MultiIndex& gamma) const;
  /// prod binom(alpha_i, gamma_i).
  Rational binomial(const MultiIndex& gamma) const;

  /// Zero-pads (or requires trailing zeros when shrinking) to n entries.
  MultiIndex resized(std::size_t n) const;

  /// Concatenation (this, other), used for the (p, q) keys of Weyl monomials.
  MultiIndex concat(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded-lexicographic comparison: higher total degree first, then
/// lexicographically larger exponent vector first. Maps keyed with this
/// comparator iterate in print order.
struct GrLexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of length n with total degree exactly d (resp. at most d),
/// in graded-lex descending order.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, std::uint64_t d);
std::vector<MultiIndex> monomials_up_to(std::size_t n, std::uint64_t d);

/// All beta with beta <= alpha componentwise.
std::vector<MultiIndex> sub_indices(const MultiIndex& alpha);

/// Renders the monomial with variable prefix `var` ("T", "p", "t", ...):
/// `T1^2*T2`, or "" for the zero index.
std::string monomial_string(const MultiIndex& alpha, const std::string& var);

}  // namespace tcalg
