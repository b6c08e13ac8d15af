#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcalg/rational.hpp"

namespace tcalg {

/// Dense square matrix of rationals; the coefficient type of conformal
/// elements and one of the coefficient rings for formal distributions.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t N = 1) : N_(N), a_(N * N) {}
  static RatMatrix identity(std::size_t N);
  /// E_{ij} with zero-based i, j.
  static RatMatrix unit(std::size_t N, std::size_t i, std::size_t j);
  static RatMatrix scalar(std::size_t N, const Rational& c);

  std::size_t size() const { return N_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * N_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * N_ + j]; }
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }
  friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
  friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  RatMatrix transpose() const;
  /// Kronecker product with the identity of size k: block-diagonal copies.
  RatMatrix kron_identity(std::size_t k) const;

  /// `[[1, 0], [0, 1/2]]`; a 1x1 matrix prints as its entry.
  std::string to_string() const;

 private:
  std::size_t N_;
  std::vector<Rational> a_;
};

}  // namespace tcalg
