#pragma once

// Translation-invariant maps H -> A in the canonical finite form
// sum c_{gamma,beta} T^gamma . a[p^beta M], for A = M_N(A_n) (Cend) or
// A = M_N(H) (Cur), with their f-products and axiom verifiers.
//
// Cur values are carried inside M_N(A_n) with T_i stored as q_i. The
// embedding is a TC-isomorphism onto the p-free part, so both backends
// share one product and evaluation routine.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcalg/check.hpp"
#include "tcalg/hopf.hpp"
#include "tcalg/rat_matrix.hpp"
#include "tcalg/weyl.hpp"

namespace tcalg {

enum class BackendKind { CendWeyl, CurPoly };

struct Backend {
  BackendKind kind = BackendKind::CendWeyl;
  std::size_t n = 1;
  std::size_t N = 1;
  friend bool operator==(const Backend&, const Backend&) = default;
};

std::string backend_name(const Backend& b);

class ConformalElement {
 public:
  struct Key {
    MultiIndex gamma;
    MultiIndex beta;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Coeffs = std::map<Key, RatMatrix, KeyOrder>;

  explicit ConformalElement(const Backend& b) : backend_(b) {}
  /// a[p^beta M]. Throws DimensionMismatch for beta != 0 in the Cur backend.
  static ConformalElement basic(const Backend& b, const MultiIndex& beta, const RatMatrix& M);
  /// a[P] for a matrix P over k[p].
  static ConformalElement basic(const Backend& b, const PolyMatrix& P);

  const Backend& backend() const { return backend_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add_term(const MultiIndex& gamma, const MultiIndex& beta, const RatMatrix& M);

  /// max |gamma| (resp. |beta|) over the support; 0 for zero.
  std::uint64_t t_degree() const;
  std::uint64_t p_degree() const;

  ConformalElement& operator+=(const ConformalElement& o);
  ConformalElement& operator-=(const ConformalElement& o);
  ConformalElement& operator*=(const Rational& c);
  friend ConformalElement operator+(ConformalElement a, const ConformalElement& b) { return a += b; }
  friend ConformalElement operator-(ConformalElement a, const ConformalElement& b) { return a -= b; }
  friend ConformalElement operator-(ConformalElement a) { return a *= Rational(-1); }
  friend ConformalElement operator*(ConformalElement a, const Rational& c) { return a *= c; }
  friend ConformalElement operator*(const Rational& c, ConformalElement a) { return a *= c; }
  friend bool operator==(const ConformalElement& a, const ConformalElement& b) {
    return a.backend_ == b.backend_ && a.coeffs_ == b.coeffs_;
  }

  /// `T1^2 . a[p1 - 1] + a[1]`; one summand per gamma, the argument is the
  /// matrix over k[p] collected from all beta.
  std::string to_string() const;

 private:
  void require_same_backend(const ConformalElement& o) const;

  Backend backend_;
  Coeffs coeffs_;
};

/// The matrix over k[p] multiplying T^gamma, i.e. sum_beta p^beta c_{gamma,beta}.
PolyMatrix argument_at(const ConformalElement& c, const MultiIndex& gamma);

/// Renders a target value; Cur values print with T_i in place of q_i.
std::string format_value(const Backend& b, const MatWeyl& v);

MatWeyl eval(const ConformalElement& c, const HPoly& f);

/// T_i . c, i.e. (T_i c)(f) = -c(df/dT_i).
ConformalElement haction(std::size_t i, const ConformalElement& c);
/// h . c for arbitrary h in H.
ConformalElement haction(const HPoly& h, const ConformalElement& c);

/// Candidate values c(T^alpha). With a window w the table must cover every
/// |alpha| <= w, and the layer |alpha| = w serves as the cross-check that no
/// coefficient lies beyond the window.
struct EvalTable {
  std::map<MultiIndex, MatWeyl, GrLexGreater> values;
  std::optional<std::uint64_t> window;
};

EvalTable eval_table(const ConformalElement& c, std::uint64_t window);

/// Inverse of evaluation. Throws InconsistentTable when no T-invariant map
/// fits the stored values, NotReconstructible when the window check fails.
ConformalElement reconstruct(const Backend& b, const EvalTable& t);

/// (a_(f) b)(g) = a(f_(1)) b(S(f_(2)) g).
ConformalElement fproduct(const ConformalElement& a, const ConformalElement& b, const HPoly& f);
/// a_(x) b with x in the divided-power span, t^l identified with T^l.
ConformalElement xproduct(const ConformalElement& a, const ConformalElement& b, const DualPoly& x);
/// a_(k) b = a_(T^k) b. One-variable sessions only (SessionError otherwise).
ConformalElement nproduct(const ConformalElement& a, const ConformalElement& b, unsigned k);

/// degT(a) + degT(b) + deg_p(a) + deg_p(b): every nonzero a_(T^l) b has |l|
/// at most this.
std::uint64_t locality_bound(const ConformalElement& a, const ConformalElement& b);
/// All l with a_(T^l) b != 0, found by probing one degree past the bound.
std::vector<MultiIndex> locality_set(const ConformalElement& a, const ConformalElement& b);

CheckResult check_evaluation_identity(const ConformalElement& a, const ConformalElement& b, const HPoly& f,
                                      const HPoly& g);
/// Linearity of a_(f) b in a, in b and in f.
std::vector<CheckResult> check_H0(const ConformalElement& a, const ConformalElement& a2, const ConformalElement& b,
                                  const ConformalElement& b2, const HPoly& f, const HPoly& f2, const Rational& s,
                                  const Rational& t);
/// (h a)_(x) b = a_(x h) b and a_(x) (h b) = h_(2) (a_(S(h_(1)) x) b) at
/// x = t^lambda. A failure reports how the untwisted action would fare.
std::vector<CheckResult> check_H2(const ConformalElement& a, const ConformalElement& b, const HPoly& h,
                                  const MultiIndex& lambda);
/// T a_(k) b = -k a_(k-1) b (T a_(0) b = 0 at k = 0).
CheckResult check_C2(const ConformalElement& a, const ConformalElement& b, unsigned k);
/// a_(k) T b = T(a_(k) b) + k a_(k-1) b.
CheckResult check_C3(const ConformalElement& a, const ConformalElement& b, unsigned k);

/// Whether the raw table is the restriction of some canonical element.
CheckResult check_T_invariance(const Backend& b, const EvalTable& t);

/// Pairs (c, f) with sum eval(c, f) = target: for each q-exponent alpha the
/// basic map a[sum p^beta M] paired with T^alpha.
std::vector<std::pair<ConformalElement, HPoly>> tc_witness(const Backend& b, const MatWeyl& target);

}  // namespace tcalg
