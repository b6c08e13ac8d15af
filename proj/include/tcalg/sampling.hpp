#pragma once

// Seeded random elements for property tests and the randomized check suites.

#include <random>
#include <vector>

#include "tcalg/confalg.hpp"
#include "tcalg/fdist.hpp"
#include "tcalg/hopf.hpp"
#include "tcalg/weyl.hpp"

namespace tcalg::sampling {

inline int small_int(std::mt19937& rng, int lo = -3, int hi = 3) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline MultiIndex random_index(std::mt19937& rng, std::size_t n, std::uint64_t max_degree) {
  auto all = monomials_up_to(n, max_degree);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t N) {
  RatMatrix m(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = small_int(rng);
  return m;
}

inline HPoly random_poly(std::mt19937& rng, std::size_t n, std::uint64_t max_degree, int terms) {
  HPoly f(n);
  for (int t = 0; t < terms; ++t) f.add_term(random_index(rng, n, max_degree), Rational(small_int(rng)));
  return f;
}

inline WeylElement random_weyl(std::mt19937& rng, std::size_t n, std::uint64_t max_degree, int terms) {
  WeylElement w(n);
  for (int t = 0; t < terms; ++t) {
    MultiIndex k = random_index(rng, 2 * n, max_degree);
    MultiIndex p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = k[i];
      q[i] = k[n + i];
    }
    w.add_term({p, q}, Rational(small_int(rng)));
  }
  return w;
}

inline MatWeyl random_mat_weyl(std::mt19937& rng, std::size_t n, std::size_t N, std::uint64_t max_degree, int terms) {
  MatWeyl m(n, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = random_weyl(rng, n, max_degree, terms);
  return m;
}

/// Up to `support` terms T^gamma a[p^beta M] with |gamma|, |beta| <= max_degree.
inline ConformalElement random_conformal(std::mt19937& rng, const Backend& b, int support, std::uint64_t max_degree) {
  ConformalElement c(b);
  for (int t = 0; t < support; ++t) {
    MultiIndex gamma = random_index(rng, b.n, max_degree);
    MultiIndex beta =
        b.kind == BackendKind::CurPoly ? MultiIndex::zero(b.n) : random_index(rng, b.n, max_degree);
    c.add_term(gamma, beta, random_matrix(rng, b.N));
  }
  return c;
}

/// Up to `terms` coefficients r z^k, k in [-radius, radius].
template <class R, class Coeff>
FormalDistribution<R> random_distribution(std::mt19937& rng, long radius, int terms, Coeff coeff) {
  FormalDistribution<R> d;
  for (int t = 0; t < terms; ++t) d.add_term(std::uniform_int_distribution<long>(-radius, radius)(rng), coeff(rng));
  return d;
}

inline LaurentPoly random_laurent(std::mt19937& rng, long radius, int terms) {
  LaurentPoly l;
  for (int t = 0; t < terms; ++t) l.add_term(std::uniform_int_distribution<long>(-radius, radius)(rng), Rational(small_int(rng)));
  return l;
}

}  // namespace tcalg::sampling
