#include <doctest.h>

#include <random>

#include "tcalg/errors.hpp"
#include "tcalg/weyl.hpp"

using namespace tcalg;

namespace {

WeylElement P(std::size_t n, std::size_t i) { return WeylElement::p(n, i); }
WeylElement Q(std::size_t n, std::size_t i) { return WeylElement::q(n, i); }
WeylElement one(std::size_t n) { return WeylElement::constant(n, Rational(1)); }
WeylElement c(std::size_t n, Rational v) { return WeylElement::constant(n, v); }

// Every normal-form monomial p^b q^a with |a| + |b| <= d.
std::vector<WeylElement> weyl_monomials(std::size_t n, std::uint64_t d) {
  std::vector<WeylElement> out;
  for (const auto& k : monomials_up_to(2 * n, d)) {
    MultiIndex p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = k[i];
      q[i] = k[n + i];
    }
    out.push_back(WeylElement::monomial(p, q));
  }
  return out;
}

WeylElement random_element(std::mt19937& rng, std::size_t n, std::uint64_t d, int terms) {
  auto basis = weyl_monomials(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  WeylElement out(n);
  for (int t = 0; t < terms; ++t) out += basis[pick(rng)] * Rational(coeff(rng));
  return out;
}

}  // namespace

TEST_CASE("weyl_mul examples") {
  CHECK(Q(1, 0) * P(1, 0) == P(1, 0) * Q(1, 0) + one(1));
  CHECK(Q(2, 0) * P(2, 1) == P(2, 1) * Q(2, 0));
  CHECK(Q(1, 0) * pow(P(1, 0), 2) == pow(P(1, 0), 2) * Q(1, 0) + c(1, 2) * P(1, 0));
  CHECK((Q(1, 0) * P(1, 0)).to_string() == "p1*q1 + 1");
  CHECK((Q(2, 1) * pow(P(2, 0), 2) * Q(2, 0) * Q(2, 1)).to_string() == "p1^2*q1*q2^2");
  CHECK_THROWS_AS(Q(1, 0) * P(2, 0), DimensionMismatch);
}

TEST_CASE("derivation, q-adic degree, sigma examples") {
  CHECK(weyl_derivation(pow(Q(1, 0), 2), 0) == c(1, 2) * Q(1, 0));
  CHECK(weyl_derivation(P(1, 0), 0).is_zero());
  CHECK(weyl_derivation(P(1, 0) * Q(1, 0), 0) == P(1, 0));
  CHECK_THROWS_AS(weyl_derivation(P(1, 0), 1), IndexOutOfRange);
  CHECK(q_adic_degree(pow(P(1, 0), 3)) == 0);
  CHECK(q_adic_degree(P(2, 0) * Q(2, 0) * Q(2, 1) + Q(2, 0)) == 1);
  CHECK(q_adic_degree(WeylElement(2)) == kInfiniteDegree);
  CHECK(involution_sigma(P(1, 0)) == -P(1, 0));
  CHECK(involution_sigma(P(1, 0) * Q(1, 0)) == -(P(1, 0) * Q(1, 0)) - one(1));
  CHECK(involution_sigma(involution_sigma(P(1, 0) * Q(1, 0))) == P(1, 0) * Q(1, 0));
}

TEST_CASE("rep_apply examples") {
  HPoly T1 = HPoly::variable(1, 0);
  CHECK(rep_apply(P(1, 0), HPoly::constant(1, Rational(1))) == T1);
  CHECK(rep_apply(Q(1, 0), pow(T1, 2)) == T1 * Rational(2));
  CHECK(rep_apply(P(1, 0) * Q(1, 0), T1) == T1);
  MatWeyl m = MatWeyl::unit(2, 0, 1, P(1, 0));
  HVector v = rep_apply(m, basis_vector(2, MultiIndex{0}, 1));
  CHECK(v[0] == T1);
  CHECK(v[1].is_zero());
  CHECK_THROWS_AS(rep_apply(m, HVector{T1}), DimensionMismatch);
}

TEST_CASE("commutator, jordan product, ideal elements") {
  MatWeyl p = MatWeyl::scalar(1, P(1, 0)), q = MatWeyl::scalar(1, Q(1, 0));
  CHECK(commutator(q, p) == MatWeyl::identity(1, 1));
  CHECK(commutator(p, p).is_zero());
  CHECK(jordan_product(p, q) == MatWeyl::scalar(1, P(1, 0) * Q(1, 0) + c(1, Rational(1, 2))));
  HPoly T1 = HPoly::variable(1, 0);
  PolyMatrix D = PolyMatrix::diagonal({T1, T1});
  CHECK(ideal_element(MatWeyl::identity(1, 2), D) == D.in_weyl());
  CHECK(ideal_element(MatWeyl::scalar(2, Q(1, 0)), D) ==
        MatWeyl::scalar(2, P(1, 0) * Q(1, 0)) + MatWeyl::identity(1, 2));
  CHECK(ideal_element(MatWeyl(1, 2), D).is_zero());
  CHECK(MatWeyl::scalar(2, P(1, 0)).to_string() == "[[p1, 0], [0, p1]]");
}

TEST_CASE("product agrees with the representation oracle") {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto basis = weyl_monomials(n, 3);
    auto vecs = monomials_up_to(n, 6);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        WeylElement ab = a * b;
        for (const auto& alpha : vecs) {
          HPoly v = HPoly::monomial(alpha);
          CHECK(rep_apply(ab, v) == rep_apply(a, rep_apply(b, v)));
        }
      }
  }
}

TEST_CASE("matrix product agrees with the representation oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    MatWeyl a(1, 2), b(1, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = random_element(rng, 1, 3, 2);
        b(i, j) = random_element(rng, 1, 3, 2);
      }
    MatWeyl ab = a * b;
    for (const auto& alpha : monomials_up_to(1, 6))
      for (std::size_t j = 0; j < 2; ++j) {
        HVector v = basis_vector(2, alpha, j);
        CHECK(rep_apply(ab, v) == rep_apply(a, rep_apply(b, v)));
      }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    WeylElement a = random_element(rng, 2, 3, 3), b = random_element(rng, 2, 3, 3), d = random_element(rng, 2, 3, 3);
    CHECK((a * b) * d == a * (b * d));
  }
}

TEST_CASE("derivations") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    WeylElement a = random_element(rng, 2, 3, 3), b = random_element(rng, 2, 3, 3);
    for (std::size_t i = 0; i < 2; ++i) {
      WeylElement pi = P(2, i);
      CHECK(weyl_derivation(a, i) == a * pi - pi * a);
      CHECK(weyl_derivation(a * b, i) == weyl_derivation(a, i) * b + a * weyl_derivation(b, i));
      CHECK(weyl_p_derivation(a, i) == Q(2, i) * a - a * Q(2, i));
      CHECK(weyl_derivation(weyl_derivation(a, i), 1 - i) == weyl_derivation(weyl_derivation(a, 1 - i), i));
    }
    bool killed = weyl_derivation(a, 0).is_zero() && weyl_derivation(a, 1).is_zero();
    bool q_free = std::all_of(a.terms().begin(), a.terms().end(), [](const auto& t) { return t.first.q.is_zero(); });
    CHECK(killed == q_free);
    CHECK(q_adic_degree(a * b) >= q_adic_degree(b));
  }
  // Local nilpotence.
  WeylElement x = pow(Q(1, 0), 3) * P(1, 0) + Q(1, 0);
  for (int k = 0; k < 4; ++k) x = weyl_derivation(x, 0);
  CHECK(x.is_zero());
}

TEST_CASE("sigma is an involutive anti-automorphism commuting with the derivations") {
  auto basis = weyl_monomials(2, 4);
  for (const auto& a : basis) {
    CHECK(involution_sigma(involution_sigma(a)) == a);
    CHECK(involution_sigma(a).total_degree() == a.total_degree());
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(involution_sigma(weyl_derivation(a, i)) == weyl_derivation(involution_sigma(a), i));
  }
  auto small = weyl_monomials(2, 2);
  for (const auto& a : small)
    for (const auto& b : small) CHECK(involution_sigma(a * b) == involution_sigma(b) * involution_sigma(a));
  // sigma does not preserve the q-adic degree.
  CHECK(q_adic_degree(P(1, 0) * Q(1, 0)) == 1);
  CHECK(q_adic_degree(involution_sigma(P(1, 0) * Q(1, 0))) == 0);

  MatWeyl m = MatWeyl::unit(2, 0, 1, P(1, 0) * Q(1, 0)) + MatWeyl::unit(2, 1, 1, Q(1, 0));
  MatWeyl k = MatWeyl::unit(2, 1, 0, P(1, 0)) + MatWeyl::identity(1, 2);
  CHECK(involution_sigma(involution_sigma(m)) == m);
  CHECK(involution_sigma(m * k) == involution_sigma(k) * involution_sigma(m));
}

TEST_CASE("ideal closure under left multiplication and derivations") {
  HPoly T1 = HPoly::variable(1, 0);
  PolyMatrix Qm(1, 2);
  Qm(0, 0) = pow(T1, 2);
  Qm(0, 1) = T1;
  Qm(1, 1) = HPoly::constant(1, Rational(3));
  MatWeyl m = MatWeyl::unit(2, 0, 0, pow(Q(1, 0), 2)) + MatWeyl::unit(2, 1, 0, P(1, 0) * Q(1, 0));
  MatWeyl x = ideal_element(m, Qm);
  CHECK(weyl_derivation(x, 0) == ideal_element(weyl_derivation(m, 0), Qm));
  MatWeyl l = MatWeyl::unit(2, 0, 1, Q(1, 0));
  CHECK(l * x == ideal_element(l * m, Qm));
}

TEST_CASE("T-invariance of the basic maps") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& beta : monomials_up_to(n, 2))
      for (const auto& alpha : monomials_up_to(n, 4)) {
        WeylElement image = WeylElement::monomial(beta, alpha);
        for (std::size_t i = 0; i < n; ++i) {
          WeylElement expected(n);
          if (alpha[i] > 0) {
            MultiIndex lower = alpha;
            lower[i] -= 1;
            expected = WeylElement::monomial(beta, lower, Rational(alpha[i]));
          }
          CHECK(weyl_derivation(image, i) == expected);
        }
      }
}
