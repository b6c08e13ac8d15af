#pragma once

// Normal-ordered arithmetic in the Weyl algebra A_n = k<p, q | [q_i, p_j] =
// delta_ij> and in the matrix algebras M_N(A_n), together with the canonical
// representation on H (x) k^N (p_i = multiplication by T_i, q_i = d/dT_i).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcalg/hopf.hpp"
#include "tcalg/multi_index.hpp"
#include "tcalg/rat_matrix.hpp"
#include "tcalg/rational.hpp"

namespace tcalg {

/// Exponents of the normal-ordered monomial p^p q^q.
struct WeylKey {
  MultiIndex p;
  MultiIndex q;
  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

struct WeylKeyOrder {
  bool operator()(const WeylKey& a, const WeylKey& b) const;
};

class WeylElement {
 public:
  using Terms = std::map<WeylKey, Rational, WeylKeyOrder>;

  explicit WeylElement(std::size_t n = 0) : n_(n) {}
  static WeylElement constant(std::size_t n, const Rational& c);
  static WeylElement monomial(const MultiIndex& p, const MultiIndex& q, const Rational& c = Rational(1));
  static WeylElement p(std::size_t n, std::size_t i);
  static WeylElement q(std::size_t n, std::size_t i);
  /// The polynomial f(T) with T_i read as p_i (resp. q_i).
  static WeylElement from_p_poly(const HPoly& f);
  static WeylElement from_q_poly(const HPoly& f);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const WeylKey& k) const;
  void add_term(const WeylKey& k, const Rational& c);

  /// Maximal p-degree (resp. total degree) over the support; 0 for zero.
  std::uint64_t p_degree() const;
  std::uint64_t total_degree() const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator-(WeylElement a) { return a *= Rational(-1); }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// `p1^2*q1*q2 - 3*p2 + 1`.
  std::string to_string() const;

 private:
  std::size_t n_;
  Terms terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement pow(const WeylElement& a, unsigned k);

/// d_i = [., p_i], i.e. the formal derivative in q_i of the normal form.
WeylElement weyl_derivation(const WeylElement& a, std::size_t i);
/// [q_i, .], the formal derivative in p_i; the derivations of the p-adic
/// picture of W_n.
WeylElement weyl_p_derivation(const WeylElement& a, std::size_t i);

/// min total q-degree over the support; kInfiniteDegree for 0. a lies in the
/// left ideal Q_k iff the result is >= k.
std::uint64_t q_adic_degree(const WeylElement& a);

/// The q-free part as a polynomial in p (T_i standing for p_i).
HPoly q_free_part(const WeylElement& a);
/// An element free of p's, as a polynomial with T_i standing for q_i. Throws
/// DimensionMismatch if some p occurs.
HPoly q_only_poly(const WeylElement& a);

/// Anti-automorphism fixing q_i and negating p_i.
WeylElement involution_sigma(const WeylElement& a);

/// Canonical action on H: p_i multiplies by T_i, q_i differentiates.
HPoly rep_apply(const WeylElement& a, const HPoly& v);

/// Element of M_N(A_n), stored row-major.
class MatWeyl {
 public:
  MatWeyl(std::size_t n = 0, std::size_t N = 1);
  static MatWeyl identity(std::size_t n, std::size_t N);
  static MatWeyl scalar(std::size_t N, const WeylElement& w);
  /// w * E_{ij}, zero-based.
  static MatWeyl unit(std::size_t N, std::size_t i, std::size_t j, const WeylElement& w);
  /// Constant matrix M viewed in M_N(A_n).
  static MatWeyl from_matrix(std::size_t n, const RatMatrix& m);

  std::size_t nvars() const { return n_; }
  std::size_t size() const { return N_; }
  const WeylElement& operator()(std::size_t i, std::size_t j) const { return e_[i * N_ + j]; }
  WeylElement& operator()(std::size_t i, std::size_t j) { return e_[i * N_ + j]; }
  bool is_zero() const;

  MatWeyl& operator+=(const MatWeyl& o);
  MatWeyl& operator-=(const MatWeyl& o);
  MatWeyl& operator*=(const Rational& c);
  friend MatWeyl operator+(MatWeyl a, const MatWeyl& b) { return a += b; }
  friend MatWeyl operator-(MatWeyl a, const MatWeyl& b) { return a -= b; }
  friend MatWeyl operator-(MatWeyl a) { return a *= Rational(-1); }
  friend MatWeyl operator*(MatWeyl a, const Rational& c) { return a *= c; }
  friend MatWeyl operator*(const Rational& c, MatWeyl a) { return a *= c; }
  friend MatWeyl operator*(const MatWeyl& a, const MatWeyl& b);
  friend bool operator==(const MatWeyl& a, const MatWeyl& b) = default;

  /// Entry for N = 1, `[[a, b], [c, d]]` otherwise.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t N_;
  std::vector<WeylElement> e_;
};

MatWeyl pow(const MatWeyl& a, unsigned k);

/// Entrywise d_i = [., p_i] (p_i is central in the matrix sense).
MatWeyl weyl_derivation(const MatWeyl& a, std::size_t i);
std::uint64_t q_adic_degree(const MatWeyl& a);
std::uint64_t total_degree(const MatWeyl& a);

/// sigma = (p -> -p, q -> q anti-automorphism) composed with the transpose.
MatWeyl involution_sigma(const MatWeyl& a);

MatWeyl commutator(const MatWeyl& a, const MatWeyl& b);
/// (ab + ba) / 2.
MatWeyl jordan_product(const MatWeyl& a, const MatWeyl& b);

/// Element of M = H (x) k^N.
using HVector = std::vector<HPoly>;

/// T^alpha e_j, zero-based j.
HVector basis_vector(std::size_t N, const MultiIndex& alpha, std::size_t j);
HVector rep_apply(const MatWeyl& a, const HVector& v);

/// N x N matrix of polynomials in p_1..p_n, stored as HPoly in T.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t N) : n_(n), N_(N), e_(N * N, HPoly(n)) {}
  static PolyMatrix diagonal(const std::vector<HPoly>& d);

  std::size_t nvars() const { return n_; }
  std::size_t size() const { return N_; }
  const HPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * N_ + j]; }
  HPoly& operator()(std::size_t i, std::size_t j) { return e_[i * N_ + j]; }

  /// Q(p_1..p_n) as an element of M_N(A_n).
  MatWeyl in_weyl() const;

 private:
  std::size_t n_;
  std::size_t N_;
  std::vector<HPoly> e_;
};

/// m * Q(p), an element of the left ideal A_{n,N,Q} = M_N(A_n) Q(p).
MatWeyl ideal_element(const MatWeyl& m, const PolyMatrix& Q);

}  // namespace tcalg
