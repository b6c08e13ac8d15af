#pragma once

// Exact arithmetic in H = k[T1..Tn] with its primitive-generator Hopf
// structure, tensor powers of H, and the divided-power span of the dual.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "tcalg/multi_index.hpp"
#include "tcalg/rational.hpp"

namespace tcalg {

/// Sentinel returned by the valuation functions for the zero element.
inline constexpr std::uint64_t kInfiniteDegree = std::numeric_limits<std::uint64_t>::max();

class HPoly {
 public:
  using Terms = std::map<MultiIndex, Rational, GrLexGreater>;

  explicit HPoly(std::size_t n = 0) : n_(n) {}
  static HPoly constant(std::size_t n, const Rational& c);
  static HPoly monomial(const MultiIndex& alpha, const Rational& c = Rational(1));
  /// T_{i+1}.
  static HPoly variable(std::size_t n, std::size_t i);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, const Rational& c);

  /// Largest total degree in the support; 0 for the zero polynomial.
  std::uint64_t degree() const;

  HPoly& operator+=(const HPoly& other);
  HPoly& operator-=(const HPoly& other);
  HPoly& operator*=(const Rational& c);
  HPoly& operator*=(const HPoly& other);

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(HPoly a, const Rational& c) { return a *= c; }
  friend HPoly operator*(const Rational& c, HPoly a) { return a *= c; }
  friend HPoly operator-(HPoly a) { return a *= Rational(-1); }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Canonical text, graded-lex descending: `3*T1^2*T2 - 1/2`.
  std::string to_string(const std::string& var = "T") const;

 private:
  std::size_t n_;
  Terms terms_;
};

HPoly pow(const HPoly& f, unsigned k);

/// d/dT_{i+1}.
HPoly partial_derivative(const HPoly& f, std::size_t i);

/// min |alpha| over the support; kInfiniteDegree for 0. f lies in the k-th
/// power of the augmentation ideal iff aug_degree(f) >= k.
std::uint64_t aug_degree(const HPoly& f);

Rational counit(const HPoly& f);
HPoly antipode(const HPoly& f);

/// Element of H^{(x)k}: a sparse combination of k-tuples of monomials.
class HTensor {
 public:
  using Key = std::vector<MultiIndex>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, Rational, KeyLess>;

  HTensor(std::size_t n, std::size_t arity) : n_(n), arity_(arity) {}

  std::size_t nvars() const { return n_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Key& k) const;
  void add_term(const Key& k, const Rational& c);

  HTensor& operator+=(const HTensor& other);
  HTensor& operator-=(const HTensor& other);
  HTensor& operator*=(const Rational& c);
  friend HTensor operator+(HTensor a, const HTensor& b) { return a += b; }
  friend HTensor operator-(HTensor a, const HTensor& b) { return a -= b; }
  friend HTensor operator*(HTensor a, const Rational& c) { return a *= c; }
  /// Componentwise product in the commutative ring H^{(x)k}.
  friend HTensor operator*(const HTensor& a, const HTensor& b);
  friend bool operator==(const HTensor& a, const HTensor& b) {
    return a.n_ == b.n_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// `T1 (x) 1 + 1 (x) T1`.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t arity_;
  Terms terms_;
};

/// f_1 (x) ... (x) f_k.
HTensor tensor(const std::vector<HPoly>& legs);

/// Rearranges legs: leg j of the result is leg perm[j] of the input.
HTensor permute_legs(const HTensor& u, const std::vector<std::size_t>& perm);

/// Applies the coproduct to leg i, producing arity + 1 legs.
HTensor coproduct_on_leg(const HTensor& u, std::size_t i);
/// Applies the counit to leg i, producing arity - 1 legs.
HTensor counit_on_leg(const HTensor& u, std::size_t i);
/// Applies the antipode to leg i.
HTensor antipode_on_leg(const HTensor& u, std::size_t i);
/// Multiplies all legs together.
HPoly multiply_legs(const HTensor& u);
/// The arity-1 tensor viewed as a polynomial.
HPoly as_poly(const HTensor& u);

HTensor coproduct(const HPoly& f);
/// Delta^0 = id, Delta^k = (id (x) Delta^{k-1}) Delta; k + 1 legs.
HTensor iterated_coproduct(const HPoly& f, unsigned k);

/// Phi(f (x) g) = f S(g_(1)) (x) g_(2).
HTensor phi(const HTensor& u);
/// Phi^{-1}(f (x) g) = f g_(1) (x) g_(2).
HTensor phi_inv(const HTensor& u);

/// Element sum c_l t^l of the span of the dual basis, <t^l, T^m> = delta l!.
class DualPoly {
 public:
  using Terms = std::map<MultiIndex, Rational, GrLexGreater>;

  explicit DualPoly(std::size_t n = 0) : n_(n) {}
  static DualPoly monomial(const MultiIndex& lambda, const Rational& c = Rational(1));

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& lambda) const;
  void add_term(const MultiIndex& lambda, const Rational& c);

  DualPoly& operator+=(const DualPoly& other);
  DualPoly& operator-=(const DualPoly& other);
  DualPoly& operator*=(const Rational& c);
  friend DualPoly operator+(DualPoly a, const DualPoly& b) { return a += b; }
  friend DualPoly operator-(DualPoly a, const DualPoly& b) { return a -= b; }
  friend DualPoly operator*(DualPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const DualPoly& a, const DualPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// `t1^2 - 3*t2`.
  std::string to_string() const { return as_poly().to_string("t"); }

 private:
  HPoly as_poly() const;

  std::size_t n_;
  Terms terms_;
};

Rational pairing(const DualPoly& x, const HPoly& f);

/// t^l t^m = t^{l+m}; dual to the coproduct of H.
DualPoly dual_mul(const DualPoly& x, const DualPoly& y);

/// Right action of H on the dual span: <x.h, f> = <x, S(h) f>.
DualPoly dual_h_action(const DualPoly& x, const HPoly& h);

/// The untwisted alternative <x.h, f> = <x, h f>. Only used to diagnose sign
/// conventions when an axiom check fails.
DualPoly dual_h_action_untwisted(const DualPoly& x, const HPoly& h);

/// The identification T_i -> T_i^* of H with a subalgebra of H^*; sends T^l
/// to t^l.
DualPoly to_dual(const HPoly& f);
HPoly from_dual(const DualPoly& x);

}  // namespace tcalg
