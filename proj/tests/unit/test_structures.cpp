#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "tcalg/errors.hpp"
#include "tcalg/structures.hpp"

using namespace tcalg;
using tcalg::testing::random_conformal;
using tcalg::testing::random_mat_weyl;
using tcalg::testing::random_poly;

namespace {

HPoly T(std::size_t n, std::size_t i) { return HPoly::variable(n, i); }
HPoly c(std::size_t n, long v) { return HPoly::constant(n, Rational(v)); }

PolyDerivation d(const HPoly& f, std::size_t i) { return PolyDerivation::basic(f, i); }

PolyDerivation random_derivation(std::mt19937& rng, std::size_t n, std::uint64_t degree) {
  std::vector<HPoly> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(random_poly(rng, n, degree, 3));
  return PolyDerivation(f);
}

// The Weyl element with every key padded to n variables.
WeylElement pad(const WeylElement& w, std::size_t n) {
  WeylElement out(n);
  for (const auto& [k, cf] : w.terms()) out.add_term({k.p.resized(n), k.q.resized(n)}, cf);
  return out;
}

MatWeyl pad(const MatWeyl& m, std::size_t n) {
  MatWeyl out(n, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = pad(m(i, j), n);
  return out;
}

}  // namespace

TEST_CASE("poisson examples") {
  CHECK(poisson(T(2, 0), T(2, 1), 1) == c(2, 1));
  HPoly f = T(2, 0) * T(2, 1) + pow(T(2, 1), 3);
  CHECK(poisson(f, f, 1).is_zero());
  CHECK(poisson(pow(T(2, 0), 2), T(2, 1), 1) == c(2, 2) * T(2, 0));
  CHECK_THROWS_AS(poisson(T(3, 0), T(3, 1), 1), DimensionMismatch);
  CHECK_THROWS_AS(poisson(T(2, 0), T(2, 1), 2), DimensionMismatch);
}

TEST_CASE("Jacobi identity for the Poisson bracket on monomials") {
  for (std::size_t k : {1u, 2u}) {
    std::size_t n = 2 * k;
    auto basis = monomials_up_to(n, k == 1 ? 3 : 2);
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& e : basis) {
          HPoly f = HPoly::monomial(a), g = HPoly::monomial(b), h = HPoly::monomial(e);
          HPoly j = poisson(poisson(f, g, k), h, k) + poisson(poisson(g, h, k), f, k) + poisson(poisson(h, f, k), g, k);
          CHECK(j.is_zero());
        }
  }
}

TEST_CASE("Jacobi for degree 3 monomials at n = 4 on samples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    HPoly f = random_poly(rng, 4, 3, 3), g = random_poly(rng, 4, 3, 3), h = random_poly(rng, 4, 3, 3);
    CHECK((poisson(poisson(f, g, 2), h, 2) + poisson(poisson(g, h, 2), f, 2) + poisson(poisson(h, f, 2), g, 2)).is_zero());
  }
}

TEST_CASE("derivation examples and text") {
  CHECK(der_bracket(d(c(1, 1), 0), d(T(1, 0), 0)) == d(c(1, 1), 0));
  PolyDerivation D = d(T(2, 1), 0) - d(T(2, 0), 1);
  CHECK(der_bracket(D, D).is_zero());
  CHECK(D.to_string() == "T2*d1 - T1*d2");
  CHECK(PolyDerivation(2).to_string() == "0");
  HPoly f = T(2, 0), g = T(2, 1);
  CHECK(der_apply(D, f * g) == der_apply(D, f) * g + f * der_apply(D, g));
  CHECK_THROWS_AS(der_bracket(PolyDerivation(1), PolyDerivation(2)), DimensionMismatch);
  CHECK_THROWS_AS(der_apply(PolyDerivation(1), T(2, 0)), DimensionMismatch);
}

TEST_CASE("der_bracket is a Lie bracket and der_apply a derivation") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    PolyDerivation A = random_derivation(rng, 2, 3), B = random_derivation(rng, 2, 3), C = random_derivation(rng, 2, 3);
    CHECK((der_bracket(A, B) + der_bracket(B, A)).is_zero());
    CHECK((der_bracket(der_bracket(A, B), C) + der_bracket(der_bracket(B, C), A) + der_bracket(der_bracket(C, A), B))
              .is_zero());
    HPoly f = random_poly(rng, 2, 2, 3), g = random_poly(rng, 2, 2, 3);
    CHECK(der_apply(A, f * g) == der_apply(A, f) * g + f * der_apply(A, g));
    CHECK(der_apply(der_bracket(A, B), f) == der_apply(A, der_apply(B, f)) - der_apply(B, der_apply(A, f)));
  }
}

TEST_CASE("divergence examples and bracket rule") {
  CHECK(divergence(d(T(2, 1), 0)).is_zero());
  CHECK(is_in_Sn(d(T(2, 1), 0)));
  CHECK(divergence(d(T(2, 0), 0)) == c(2, 1));
  CHECK_FALSE(is_in_Sn(d(T(2, 0), 0)));
  CHECK(is_in_Sn(PolyDerivation(3)));
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    PolyDerivation A = random_derivation(rng, 2, 3), B = random_derivation(rng, 2, 3);
    CHECK(divergence(der_bracket(A, B)) == der_apply(A, divergence(B)) - der_apply(B, divergence(A)));
    // Divergence-free samples: hamiltonian fields are in S_n.
    PolyDerivation H1 = hamiltonian_field(random_poly(rng, 2, 3, 3), 1);
    PolyDerivation H2 = hamiltonian_field(random_poly(rng, 2, 3, 3), 1);
    REQUIRE(is_in_Sn(H1));
    REQUIRE(is_in_Sn(H2));
    CHECK(is_in_Sn(der_bracket(H1, H2)));
  }
}

TEST_CASE("differential forms") {
  DifferentialForm s = DifferentialForm::symplectic(1);
  CHECK(s.to_string() == "dT1^dT2");
  CHECK(DifferentialForm::volume(3).to_string() == "dT1^dT2^dT3");
  CHECK(exterior_d(s).is_zero());
  DifferentialForm w = DifferentialForm::monomial(T(2, 0) - c(2, 1), {1, 0}, 2);
  CHECK(w.to_string() == "(-T1 + 1) dT1^dT2");
  CHECK(DifferentialForm::monomial(T(2, 0), {0, 0}, 2).is_zero());
  DifferentialForm one = DifferentialForm::monomial(T(2, 1), {0}, 2) + DifferentialForm::monomial(c(2, 1), {1}, 2);
  CHECK(one.to_string() == "T2 dT1 + dT2");
  CHECK(exterior_d(one).to_string() == "-dT1^dT2");
  CHECK(exterior_d(DifferentialForm::monomial(pow(T(2, 0), 2), {}, 2)).to_string() == "2*T1 dT1");
  CHECK_THROWS_AS(DifferentialForm::monomial(T(2, 0), {2}, 2), IndexOutOfRange);
}

TEST_CASE("d of d vanishes on 1-forms with coefficients of degree <= 3") {
  for (std::size_t n : {2u, 3u})
    for (const auto& a : monomials_up_to(n, 3))
      for (std::uint32_t i = 0; i < n; ++i) {
        DifferentialForm w = DifferentialForm::monomial(HPoly::monomial(a), {i}, n);
        CHECK(exterior_d(exterior_d(w)).is_zero());
      }
}

TEST_CASE("symplectic membership") {
  CHECK_FALSE(is_in_Hn(d(T(2, 0), 0)));
  CHECK(exterior_d(contract_symplectic(d(T(2, 0), 0))).to_string() == "dT1^dT2");
  CHECK(is_in_Hn(PolyDerivation(4)));
  CHECK_THROWS_AS(contract_symplectic(PolyDerivation(3)), DimensionMismatch);
  for (const auto& a : monomials_up_to(2, 4)) CHECK(is_in_Hn(hamiltonian_field(HPoly::monomial(a), 1)));
  std::mt19937 rng(21);
  for (int t = 0; t < 20; ++t) {
    PolyDerivation A = hamiltonian_field(random_poly(rng, 4, 3, 3), 2);
    PolyDerivation B = hamiltonian_field(random_poly(rng, 4, 3, 3), 2);
    CHECK(is_in_Hn(A));
    CHECK(is_in_Hn(der_bracket(A, B)));
  }
}

TEST_CASE("hamiltonian field examples") {
  CHECK(hamiltonian_field(T(2, 0), 1) == d(c(2, 1), 1));
  CHECK(hamiltonian_field(c(2, 5), 1).is_zero());
  CHECK(hamiltonian_field(T(2, 0) * T(2, 1), 1) == d(T(2, 1), 1) - d(T(2, 0), 0));
  CHECK_THROWS_AS(hamiltonian_field(T(3, 0), 1), DimensionMismatch);
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    HPoly f = random_poly(rng, 2, 3, 3);
    PolyDerivation D = hamiltonian_field(f, 1);
    for (const auto& a : monomials_up_to(2, 3)) CHECK(der_apply(D, HPoly::monomial(a)) == poisson(f, HPoly::monomial(a), 1));
  }
}

TEST_CASE("poisson homomorphism") {
  CHECK(check_poisson_homomorphism(T(2, 0), T(2, 1), 1).passed);
  HPoly f = pow(T(2, 0), 2) * T(2, 1);
  CHECK(check_poisson_homomorphism(f, f, 1).passed);
  auto basis = monomials_up_to(2, 3);
  for (const auto& a : basis)
    for (const auto& b : basis) CHECK(check_poisson_homomorphism(HPoly::monomial(a), HPoly::monomial(b), 1).passed);
}

TEST_CASE("skew and sym parts") {
  MatWeyl p1 = MatWeyl::scalar(1, WeylElement::p(1, 0));
  MatWeyl q1 = MatWeyl::scalar(1, WeylElement::q(1, 0));
  CHECK(skew_part(q1).is_zero());
  CHECK(skew_part(p1) == p1);
  CHECK(sym_part(p1).is_zero());
  std::mt19937 rng(13);
  for (int t = 0; t < 30; ++t) {
    MatWeyl a = random_mat_weyl(rng, 1, 2, 2, 3), b = random_mat_weyl(rng, 1, 2, 2, 3);
    CHECK(skew_part(a) + sym_part(a) == a);
    MatWeyl sa = skew_part(a), sb = skew_part(b);
    CHECK(involution_sigma(sa) == -sa);
    CHECK(involution_sigma(commutator(sa, sb)) == -commutator(sa, sb));
    MatWeyl ya = sym_part(a), yb = sym_part(b);
    CHECK(involution_sigma(ya) == ya);
    CHECK(involution_sigma(jordan_product(ya, yb)) == jordan_product(ya, yb));
  }
}

TEST_CASE("commutation identity on M_2(A_2)") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    MatWeyl a = random_mat_weyl(rng, 2, 2, 3, 4);
    CHECK(check_commutation_identity(a, 0).passed);
    CHECK(check_commutation_identity(a, 1).passed);
  }
}

TEST_CASE("matrix embedding") {
  const Backend b1{BackendKind::CendWeyl, 1, 1};
  ConformalElement a = ConformalElement::basic(b1, MultiIndex{1}, RatMatrix::scalar(1, Rational(1)));
  ConformalElement e = matrix_tc_embed(a, 2);
  CHECK(e.backend().N == 2);
  CHECK(e.to_string() == "a[[[p1, 0], [0, p1]]]");
  CHECK(matrix_tc_embed(a, 2, 0, 1).to_string() == "a[[[0, p1], [0, 0]]]");
  CHECK_THROWS_AS(matrix_tc_embed(e, 2, 0, 0), DimensionMismatch);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    ConformalElement x = random_conformal(rng, b1, 3, 2), y = random_conformal(rng, b1, 3, 2);
    HPoly f = random_poly(rng, 1, 2, 2);
    CHECK(matrix_tc_embed(fproduct(x, y, f), 2) == fproduct(matrix_tc_embed(x, 2), matrix_tc_embed(y, 2), f));
    CHECK(check_T_invariance(e.backend(), eval_table(matrix_tc_embed(x, 2), 5)).passed);
  }
}

TEST_CASE("polynomial extension") {
  const Backend cur1{BackendKind::CurPoly, 1, 1};
  ConformalElement a = ConformalElement::basic(cur1, MultiIndex{0}, RatMatrix::scalar(1, Rational(1)));
  ConformalElement ext = poly_extension(a, 2);
  CHECK(format_value(ext.backend(), eval(ext, T(2, 0) * T(2, 1))) == "T1*T2");
  CHECK(poly_extension(a, 1) == a);
  CHECK_THROWS_AS(poly_extension(ext, 1), DimensionMismatch);

  std::mt19937 rng(9);
  for (BackendKind kind : {BackendKind::CendWeyl, BackendKind::CurPoly}) {
    const Backend b{kind, 1, 2};
    for (int t = 0; t < 10; ++t) {
      ConformalElement x = random_conformal(rng, b, 3, 2);
      ConformalElement y = poly_extension(x, 2);
      for (const auto& alpha : monomials_up_to(2, 4)) {
        // a'(T^alpha) = a(T1^alpha1) * T2^alpha2, the extra T realised as q2.
        MatWeyl expected = pad(eval(x, HPoly::monomial(MultiIndex{alpha[0]})), 2) *
                           MatWeyl::scalar(2, WeylElement::monomial(MultiIndex{0, 0}, MultiIndex{0, alpha[1]}));
        CHECK(eval(y, HPoly::monomial(alpha)) == expected);
      }
      CHECK(check_T_invariance(y.backend(), eval_table(y, 5)).passed);
    }
  }
}

TEST_CASE("W_n basic maps and converters") {
  CHECK(wn_basic_map(0, MultiIndex{1}).to_string() == "p1*q1");
  CHECK(wn_basic_map(1, MultiIndex{0, 0}) == WeylElement::q(2, 1));
  CHECK(check_wn_invariance(0, MultiIndex{2}).passed);
  CHECK(check_wn_invariance(1, MultiIndex{2, 3}).passed);
  CHECK_THROWS_AS(wn_basic_map(2, MultiIndex{0, 0}), IndexOutOfRange);
  CHECK(rep_apply(wn_basic_map(0, MultiIndex{1}), pow(T(1, 0), 3)) == c(1, 3) * pow(T(1, 0), 3));

  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    PolyDerivation A = random_derivation(rng, 2, 3), B = random_derivation(rng, 2, 3);
    CHECK(from_weyl(to_weyl(A)) == A);
    WeylElement wa = to_weyl(A), wb = to_weyl(B);
    CHECK(to_weyl(der_bracket(A, B)) == wa * wb - wb * wa);
    HPoly f = random_poly(rng, 2, 3, 3);
    CHECK(rep_apply(wa, f) == der_apply(A, f));
  }
  CHECK_THROWS_AS(from_weyl(WeylElement::p(1, 0)), DimensionMismatch);
}
