#pragma once

// Partitions, permutations and the operads of multilinear words: the free
// non-associative operad (binary trees) and the associative one (flat words),
// with substitution composition and brute-force axiom checks.
//
// Permutations are 1-based and compose right to left: (s t)(k) = s(t(k)).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcalg/check.hpp"
#include "tcalg/rational.hpp"

namespace tcalg {

/// n-partition (m_1, ..., m_n) of m = sum m_i, parts >= 1, in any order.
class Partition {
 public:
  explicit Partition(std::vector<std::uint32_t> parts);
  /// (1, ..., 1) and (m).
  static Partition identity(std::size_t n);
  static Partition trivial(std::size_t m);

  std::size_t size() const { return parts_.size(); }
  std::uint32_t total() const { return total_; }
  std::uint32_t operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<std::uint32_t>& parts() const { return parts_; }
  friend bool operator==(const Partition&, const Partition&) = default;

  /// `[2,1]`.
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint32_t total_ = 0;
};

/// All n-partitions of m.
std::vector<Partition> partitions(std::uint32_t m, std::size_t n);

/// Bijection of {1..m} in one-line notation.
class Perm {
 public:
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t m);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t k) const { return images_[k - 1]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  Perm inverse() const;
  friend Perm operator*(const Perm& s, const Perm& t);
  friend bool operator==(const Perm&, const Perm&) = default;

  /// `[2,3,1]`.
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

/// All permutations of {1..m} in lexicographic order.
std::vector<Perm> permutations(std::size_t m);

/// k <-> (i, j), all 1-based.
std::pair<std::uint32_t, std::uint32_t> index_to_pair(const Partition& pi, std::uint32_t k);
std::uint32_t pair_to_index(const Partition& pi, std::uint32_t i, std::uint32_t j);

/// s pi = (m_{s^-1(1)}, ..., m_{s^-1(n)}).
Partition sigma_on_partition(const Perm& s, const Partition& pi);

/// s^pi(t_1, ..., t_n): k <->_pi (i, j) goes to the index <->_{s pi} of
/// (s(i), t_i(j)).
Perm block_composition(const Perm& s, const Partition& pi, const std::vector<Perm>& taus);

/// pi tau = (q_1, ..., q_n) with q_i the sum of the parts of tau in block i of pi.
Partition partition_compose(const Partition& pi, const Partition& tau);

enum class Variety { Free, Assoc };

std::string variety_name(Variety v);

/// How a permutation acts on a multilinear word: Substitute replaces x_l by
/// x_{s(l)}; InverseSubstitute replaces x_l by x_{s^-1(l)}.
enum class WordAction { Substitute, InverseSubstitute };

/// Linear combination of multilinear words in x_1..x_n. A word is stored in
/// prefix form: 0 is a binary product node, a positive value is a leaf label.
/// Assoc words carry no product nodes.
class OperadElt {
 public:
  using Word = std::vector<int>;
  using Terms = std::map<Word, Rational>;

  OperadElt(Variety v, std::size_t arity) : variety_(v), arity_(arity) {}
  /// id in C(1) and mu = x1 x2 in C(2).
  static OperadElt identity(Variety v);
  static OperadElt mu(Variety v);
  /// Normalizes the word for the variety (flattens for Assoc) and validates
  /// multilinearity.
  static OperadElt word(Variety v, std::size_t arity, const Word& w, const Rational& c = Rational(1));

  Variety variety() const { return variety_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Rational& c);

  OperadElt& operator+=(const OperadElt& o);
  OperadElt& operator*=(const Rational& c);
  friend OperadElt operator+(OperadElt a, const OperadElt& b) { return a += b; }
  friend OperadElt operator*(OperadElt a, const Rational& c) { return a *= c; }
  friend bool operator==(const OperadElt&, const OperadElt&) = default;

  /// `(x1 x2) x3 - 2*(x1 (x2 x3))`.
  std::string to_string() const;

 private:
  Variety variety_;
  std::size_t arity_;
  Terms terms_;
};

/// Renders a single word: `(x1 x2) x3`.
std::string word_string(const OperadElt::Word& w);

/// Comp^pi(f, g_1, ..., g_n): substitution with relabelling through pi.
OperadElt tree_compose(const OperadElt& f, const Partition& pi, const std::vector<OperadElt>& gs);

OperadElt perm_on_operad(const Perm& s, const OperadElt& f, WordAction action = WordAction::Substitute);

/// All basis words of C(n).
std::vector<OperadElt::Word> basis_words(Variety v, std::size_t n);
/// Enumerated dimension of C(n).
std::uint64_t dim_CI(std::size_t n, Variety v);
/// n! Catalan(n - 1) resp. n!.
std::uint64_t dim_CI_closed_form(std::size_t n, Variety v);

/// Exhaustive associativity over all basis elements with p <= max_leaves.
CheckResult check_A1(Variety v, std::size_t max_leaves);
/// Both unit identities for all basis elements of arity <= max_arity.
CheckResult check_A2(Variety v, std::size_t max_arity);
/// Equivariance over all sigma, pi, tau_i and basis elements with m <=
/// max_leaves, reading tau_{s^-1(i)} psi_{s^-1(i)} literally. A failure also
/// reports the tau_i psi_{s^-1(i)} reading.
CheckResult check_A3(Variety v, std::size_t max_leaves, WordAction action = WordAction::Substitute);
/// (s t) f = t (s f) for all s, t in S_n, n <= max_arity (the compatibility
/// as displayed), and the left-action form (s t) f = s (t f).
std::vector<CheckResult> check_M3(Variety v, std::size_t max_arity, WordAction action = WordAction::Substitute);

}  // namespace tcalg
