#include <doctest.h>

#include "tcalg/errors.hpp"
#include "tcalg/hopf.hpp"

using namespace tcalg;

namespace {

HPoly T(std::size_t n, std::size_t i) { return HPoly::variable(n, i); }
HPoly one(std::size_t n) { return HPoly::constant(n, Rational(1)); }
HPoly c(std::size_t n, long v) { return HPoly::constant(n, Rational(v)); }

// Independent coproduct: Delta is the algebra map with Delta(T_i) = T_i (x) 1 +
// 1 (x) T_i, so Delta(T^a) is the product of the generator images.
HTensor coproduct_oracle(const MultiIndex& alpha) {
  std::size_t n = alpha.size();
  HTensor out = tensor({one(n), one(n)});
  for (std::size_t i = 0; i < n; ++i) {
    HTensor prim = tensor({T(n, i), one(n)}) + tensor({one(n), T(n, i)});
    for (std::uint32_t k = 0; k < alpha[i]; ++k) out = out * prim;
  }
  return out;
}

}  // namespace

TEST_CASE("hpoly_mul examples") {
  CHECK(T(2, 0) * T(2, 1) == HPoly::monomial(MultiIndex{1, 1}));
  CHECK((T(1, 0) + one(1)) * (T(1, 0) - one(1)) == pow(T(1, 0), 2) - one(1));
  HPoly s = T(2, 0) + T(2, 1);
  HPoly expected = pow(T(2, 0), 2) + c(2, 2) * T(2, 0) * T(2, 1) + pow(T(2, 1), 2);
  CHECK(s * s == expected);
  CHECK_THROWS_AS(T(1, 0) * T(2, 0), DimensionMismatch);
}

TEST_CASE("canonical text is graded-lex descending") {
  HPoly f = c(2, 3) * pow(T(2, 0), 2) * T(2, 1) - HPoly::constant(2, Rational(1, 2));
  CHECK(f.to_string() == "3*T1^2*T2 - 1/2");
  CHECK((T(2, 1) + T(2, 0) + pow(T(2, 1), 2)).to_string() == "T2^2 + T1 + T2");
  CHECK(HPoly(3).to_string() == "0");
  CHECK((-T(1, 0)).to_string() == "-T1");
}

TEST_CASE("coproduct examples") {
  CHECK(coproduct(one(1)) == tensor({one(1), one(1)}));
  CHECK(coproduct(T(1, 0)) == tensor({T(1, 0), one(1)}) + tensor({one(1), T(1, 0)}));
  HTensor sq = tensor({pow(T(1, 0), 2), one(1)}) + tensor({T(1, 0), T(1, 0)}) * Rational(2) +
               tensor({one(1), pow(T(1, 0), 2)});
  CHECK(coproduct(pow(T(1, 0), 2)) == sq);
  CHECK(coproduct(T(1, 0)).to_string() == "T1 (x) 1 + 1 (x) T1");
}

TEST_CASE("iterated coproduct examples") {
  CHECK(iterated_coproduct(T(1, 0), 0) == tensor({T(1, 0)}));
  HPoly f = pow(T(2, 0), 2) * T(2, 1) + c(2, 3);
  CHECK(iterated_coproduct(f, 1) == coproduct(f));
  HTensor d2 = tensor({T(1, 0), one(1), one(1)}) + tensor({one(1), T(1, 0), one(1)}) + tensor({one(1), one(1), T(1, 0)});
  CHECK(iterated_coproduct(T(1, 0), 2) == d2);
}

TEST_CASE("antipode, counit, derivative, aug_degree examples") {
  CHECK(antipode(one(1)) == one(1));
  CHECK(antipode(T(1, 0)) == -T(1, 0));
  CHECK(antipode(T(2, 0) * T(2, 1)) == T(2, 0) * T(2, 1));
  CHECK(counit(one(1)) == 1);
  CHECK(counit(T(1, 0) + c(1, 3)) == 3);
  CHECK(counit(T(2, 0) * T(2, 1)) == 0);
  CHECK(partial_derivative(pow(T(1, 0), 2), 0) == c(1, 2) * T(1, 0));
  CHECK(partial_derivative(T(2, 0), 1).is_zero());
  CHECK(partial_derivative(T(2, 0) * T(2, 1), 0) == T(2, 1));
  CHECK_THROWS_AS(partial_derivative(T(2, 0), 2), IndexOutOfRange);
  CHECK(aug_degree(one(1) + T(1, 0)) == 0);
  CHECK(aug_degree(pow(T(2, 0), 2) + T(2, 0) * T(2, 1)) == 2);
  CHECK(aug_degree(HPoly(2)) == kInfiniteDegree);
}

TEST_CASE("pairing and dual product examples") {
  CHECK(pairing(DualPoly::monomial({2}), pow(T(1, 0), 2)) == 2);
  CHECK(pairing(DualPoly::monomial({1}), pow(T(1, 0), 2)) == 0);
  CHECK(pairing(DualPoly::monomial({1, 1}), T(2, 0) * T(2, 1)) == 1);
  CHECK(dual_mul(DualPoly::monomial({1}), DualPoly::monomial({1})) == DualPoly::monomial({2}));
  DualPoly x = DualPoly::monomial({2, 1}, Rational(3)) + DualPoly::monomial({0, 1});
  CHECK(dual_mul(DualPoly::monomial({0, 0}), x) == x);
  CHECK(dual_mul(DualPoly::monomial({1, 0}), DualPoly::monomial({0, 1})) == DualPoly::monomial({1, 1}));
  CHECK_THROWS_AS(pairing(DualPoly::monomial({1}), T(2, 0)), DimensionMismatch);
}

TEST_CASE("dual H-action examples") {
  for (std::uint32_t n = 1; n <= 5; ++n)
    CHECK(dual_h_action(DualPoly::monomial({n}), T(1, 0)) == DualPoly::monomial({n - 1}, Rational(-static_cast<long>(n))));
  DualPoly x = DualPoly::monomial({3, 1}, Rational(2, 3));
  CHECK(dual_h_action(x, one(2)) == x);
  CHECK(dual_h_action(DualPoly::monomial({0, 0}), T(2, 0)).is_zero());
}

TEST_CASE("phi examples") {
  HTensor f1 = tensor({pow(T(1, 0), 3) + c(1, 2), one(1)});
  CHECK(phi(f1) == f1);
  CHECK(phi(tensor({one(1), T(1, 0)})) == tensor({-T(1, 0), one(1)}) + tensor({one(1), T(1, 0)}));
  HTensor u = tensor({T(2, 0), T(2, 1)});
  CHECK(phi_inv(phi(u)) == u);
}

TEST_CASE("Hopf axioms on monomials up to degree 5, n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& alpha : monomials_up_to(n, 5)) {
      HPoly f = HPoly::monomial(alpha);
      HTensor d = coproduct(f);
      CHECK(d == coproduct_oracle(alpha));
      CHECK(coproduct_on_leg(d, 0) == coproduct_on_leg(d, 1));
      CHECK(permute_legs(d, {1, 0}) == d);
      CHECK(as_poly(counit_on_leg(d, 0)) == f);
      CHECK(as_poly(counit_on_leg(d, 1)) == f);
      CHECK(multiply_legs(antipode_on_leg(d, 0)) == HPoly::constant(n, counit(f)));
      CHECK(multiply_legs(antipode_on_leg(d, 1)) == HPoly::constant(n, counit(f)));
    }
}

TEST_CASE("dual product is dual to the coproduct") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto basis = monomials_up_to(n, 5);
    for (const auto& l : monomials_up_to(n, 3))
      for (const auto& m : monomials_up_to(n, 2)) {
        DualPoly x = DualPoly::monomial(l), y = DualPoly::monomial(m);
        DualPoly xy = dual_mul(x, y);
        for (const auto& nu : basis) {
          Rational rhs(0);
          HTensor d = coproduct(HPoly::monomial(nu));
          for (const auto& [k, cf] : d.terms())
            rhs += cf * pairing(x, HPoly::monomial(k[0])) * pairing(y, HPoly::monomial(k[1]));
          CHECK(pairing(xy, HPoly::monomial(nu)) == rhs);
        }
      }
  }
}

TEST_CASE("dual action matches its defining pairing") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& l : monomials_up_to(n, 4))
      for (const auto& e : monomials_up_to(n, 2)) {
        HPoly h = HPoly::monomial(e, Rational(2)) + HPoly::constant(n, Rational(-1));
        DualPoly xh = dual_h_action(DualPoly::monomial(l), h);
        for (const auto& m : monomials_up_to(n, 5)) {
          HPoly f = HPoly::monomial(m);
          CHECK(pairing(xh, f) == pairing(DualPoly::monomial(l), antipode(h) * f));
          CHECK(pairing(dual_h_action_untwisted(DualPoly::monomial(l), h), f) == pairing(DualPoly::monomial(l), h * f));
        }
      }
}

TEST_CASE("augmentation filtration is multiplicative") {
  auto basis = monomials_up_to(2, 3);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      HPoly f = HPoly::monomial(a), g = HPoly::monomial(b);
      CHECK(aug_degree(f * g) == aug_degree(f) + aug_degree(g));
      HPoly f2 = f + HPoly::monomial(a + b), g2 = g + pow(T(2, 1), 4);
      CHECK(aug_degree(f2 * g2) >= aug_degree(f2) + aug_degree(g2));
    }
}

TEST_CASE("phi and phi_inv are mutually inverse up to degree 4") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& a : monomials_up_to(n, 4))
      for (const auto& b : monomials_up_to(n, 4)) {
        if (a.degree() + b.degree() > 4) continue;
        HTensor u = tensor({HPoly::monomial(a), HPoly::monomial(b)});
        CHECK(phi_inv(phi(u)) == u);
        CHECK(phi(phi_inv(u)) == u);
      }
}
