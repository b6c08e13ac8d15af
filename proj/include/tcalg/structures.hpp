#pragma once

// Poisson bracket, polynomial vector fields W_n with the divergence-free and
// hamiltonian subalgebras, differential forms for the symplectic condition,
// sigma-symmetric parts, and constructors that enlarge conformal elements.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcalg/check.hpp"
#include "tcalg/confalg.hpp"
#include "tcalg/hopf.hpp"
#include "tcalg/weyl.hpp"

namespace tcalg {

/// {f, g} = sum_i df/dT_i dg/dT_{k+i} - df/dT_{k+i} dg/dT_i, with n = 2k.
HPoly poisson(const HPoly& f, const HPoly& g, std::size_t k);

/// D = sum f_i d/dT_i.
class PolyDerivation {
 public:
  explicit PolyDerivation(std::size_t n) : f_(n, HPoly(n)) {}
  explicit PolyDerivation(std::vector<HPoly> components);
  /// f d/dT_i.
  static PolyDerivation basic(const HPoly& f, std::size_t i);

  std::size_t nvars() const { return f_.size(); }
  const HPoly& operator[](std::size_t i) const { return f_[i]; }
  HPoly& operator[](std::size_t i) { return f_[i]; }
  const std::vector<HPoly>& components() const { return f_; }
  bool is_zero() const;

  PolyDerivation& operator+=(const PolyDerivation& o);
  PolyDerivation& operator-=(const PolyDerivation& o);
  PolyDerivation& operator*=(const Rational& c);
  friend PolyDerivation operator+(PolyDerivation a, const PolyDerivation& b) { return a += b; }
  friend PolyDerivation operator-(PolyDerivation a, const PolyDerivation& b) { return a -= b; }
  friend PolyDerivation operator*(PolyDerivation a, const Rational& c) { return a *= c; }
  friend bool operator==(const PolyDerivation&, const PolyDerivation&) = default;

  /// `T2*d1 - T1*d2`.
  std::string to_string() const;

 private:
  std::vector<HPoly> f_;
};

HPoly der_apply(const PolyDerivation& D, const HPoly& f);
PolyDerivation der_bracket(const PolyDerivation& D1, const PolyDerivation& D2);

/// sum_i df_i/dT_i; D v = div(D) v for the volume form v.
HPoly divergence(const PolyDerivation& D);
bool is_in_Sn(const PolyDerivation& D);

/// Polynomial differential form: strictly increasing zero-based index sets
/// mapped to coefficients.
class DifferentialForm {
 public:
  using Indices = std::vector<std::uint32_t>;

  DifferentialForm(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}
  /// f dT_{i_1} ^ ... ^ dT_{i_k}; indices in any order (the sign of the
  /// sorting permutation is applied, repeats give 0).
  static DifferentialForm monomial(const HPoly& f, Indices indices, std::size_t n);
  /// sum_{i <= k} dT_i ^ dT_{k+i}.
  static DifferentialForm symplectic(std::size_t k);
  /// dT_1 ^ ... ^ dT_n.
  static DifferentialForm volume(std::size_t n);

  std::size_t nvars() const { return n_; }
  std::size_t degree() const { return degree_; }
  const std::map<Indices, HPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Indices indices, const HPoly& f);

  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

  /// `T2 dT1 + (T1 - 1) dT1^dT2`.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t degree_;
  std::map<Indices, HPoly> terms_;
};

DifferentialForm exterior_d(const DifferentialForm& w);
/// iota_D s = sum_i (f_i dT_{k+i} - f_{k+i} dT_i).
DifferentialForm contract_symplectic(const PolyDerivation& D);
/// D s = 0, tested as d(iota_D s) = 0 (s is closed).
bool is_in_Hn(const PolyDerivation& D);

/// D_f = {f, .}.
PolyDerivation hamiltonian_field(const HPoly& f, std::size_t k);
/// D_{f,g} = [D_f, D_g].
CheckResult check_poisson_homomorphism(const HPoly& f, const HPoly& g, std::size_t k);

/// (a - sigma(a)) / 2 and (a + sigma(a)) / 2.
MatWeyl skew_part(const MatWeyl& a);
MatWeyl sym_part(const MatWeyl& a);

/// a p_i = p_i a + d_i(a).
CheckResult check_commutation_identity(const MatWeyl& a, std::size_t i);

/// Each coefficient M replaced by the block-diagonal M (x) 1_N.
ConformalElement matrix_tc_embed(const ConformalElement& a, std::size_t N);
/// A scalar (N = 1) element placed at position (i, j) of an N x N matrix.
ConformalElement matrix_tc_embed(const ConformalElement& a, std::size_t N, std::size_t i, std::size_t j);
/// The element on r variables viewed on n >= r variables; the extra T's pass
/// through as extra q's (T's for Cur).
ConformalElement poly_extension(const ConformalElement& a, std::size_t n);

/// p^alpha q_i.
WeylElement wn_basic_map(std::size_t i, const MultiIndex& alpha);
/// [q_j, p^alpha q_i] = alpha_j p^(alpha - e_j) q_i for every j.
CheckResult check_wn_invariance(std::size_t i, const MultiIndex& alpha);

/// sum f_i(p) q_i and back. from_weyl throws DimensionMismatch for elements
/// outside that form.
WeylElement to_weyl(const PolyDerivation& D);
PolyDerivation from_weyl(const WeylElement& w);

}  // namespace tcalg
