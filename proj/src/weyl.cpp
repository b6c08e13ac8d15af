#include "tcalg/weyl.hpp"

#include <algorithm>

#include "tcalg/errors.hpp"
#include "tcalg/text.hpp"

namespace tcalg {

namespace {

void require_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": variable count mismatch (" + std::to_string(a) + " vs " +
                            std::to_string(b) + ")");
}

void require_index(std::size_t i, std::size_t n) {
  if (i >= n) throw IndexOutOfRange("index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
}

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

std::string weyl_monomial_string(const WeylKey& k) {
  std::string p = monomial_string(k.p, "p"), q = monomial_string(k.q, "q");
  if (p.empty()) return q;
  if (q.empty()) return p;
  return p + "*" + q;
}

}  // namespace

bool WeylKeyOrder::operator()(const WeylKey& a, const WeylKey& b) const {
  std::uint64_t da = a.p.degree() + a.q.degree(), db = b.p.degree() + b.q.degree();
  if (da != db) return da > db;
  if (a.p != b.p) return a.p > b.p;
  return a.q > b.q;
}

// ---- WeylElement -----------------------------------------------------------

WeylElement WeylElement::constant(std::size_t n, const Rational& c) {
  WeylElement out(n);
  out.add_term({MultiIndex::zero(n), MultiIndex::zero(n)}, c);
  return out;
}

WeylElement WeylElement::monomial(const MultiIndex& p, const MultiIndex& q, const Rational& c) {
  require_same_n(p.size(), q.size(), "WeylElement::monomial");
  WeylElement out(p.size());
  out.add_term({p, q}, c);
  return out;
}

WeylElement WeylElement::p(std::size_t n, std::size_t i) { return monomial(MultiIndex::unit(n, i), MultiIndex::zero(n)); }

WeylElement WeylElement::q(std::size_t n, std::size_t i) { return monomial(MultiIndex::zero(n), MultiIndex::unit(n, i)); }

WeylElement WeylElement::from_p_poly(const HPoly& f) {
  WeylElement out(f.nvars());
  for (const auto& [a, c] : f.terms()) out.add_term({a, MultiIndex::zero(f.nvars())}, c);
  return out;
}

WeylElement WeylElement::from_q_poly(const HPoly& f) {
  WeylElement out(f.nvars());
  for (const auto& [a, c] : f.terms()) out.add_term({MultiIndex::zero(f.nvars()), a}, c);
  return out;
}

Rational WeylElement::coefficient(const WeylKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const WeylKey& k, const Rational& c) {
  require_same_n(n_, k.p.size(), "WeylElement::add_term");
  require_same_n(n_, k.q.size(), "WeylElement::add_term");
  accumulate(terms_, k, c);
}

std::uint64_t WeylElement::p_degree() const {
  std::uint64_t d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.p.degree());
  return d;
}

std::uint64_t WeylElement::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.p.degree() + terms_.begin()->first.q.degree();
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  require_same_n(n_, o.n_, "WeylElement +");
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  require_same_n(n_, o.n_, "WeylElement -");
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  require_same_n(a.n_, b.n_, "WeylElement *");
  WeylElement out(a.n_);
  // p^b1 q^a1 p^b2 q^a2 = sum_k k! C(a1,k) C(b2,k) p^(b1+b2-k) q^(a1+a2-k).
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) {
      MultiIndex p = x.p + y.p, q = x.q + y.q;
      Rational cd = c * d;
      for (const auto& k : sub_indices(componentwise_min(x.q, y.p))) {
        Rational w = cd * k.factorial() * x.q.binomial(k) * y.p.binomial(k);
        accumulate(out.terms_, WeylKey{*p.minus(k), *q.minus(k)}, w);
      }
    }
  return out;
}

std::string WeylElement::to_string() const {
  std::vector<text::Term> terms;
  for (const auto& [k, c] : terms_) terms.push_back({c, weyl_monomial_string(k)});
  return text::join(terms);
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) { return a * b; }

WeylElement pow(const WeylElement& a, unsigned k) {
  WeylElement out = WeylElement::constant(a.nvars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

WeylElement weyl_derivation(const WeylElement& a, std::size_t i) {
  require_index(i, a.nvars());
  WeylElement out(a.nvars());
  for (const auto& [k, c] : a.terms()) {
    if (k.q[i] == 0) continue;
    WeylKey m = k;
    m.q[i] -= 1;
    out.add_term(m, c * k.q[i]);
  }
  return out;
}

WeylElement weyl_p_derivation(const WeylElement& a, std::size_t i) {
  require_index(i, a.nvars());
  WeylElement out(a.nvars());
  for (const auto& [k, c] : a.terms()) {
    if (k.p[i] == 0) continue;
    WeylKey m = k;
    m.p[i] -= 1;
    out.add_term(m, c * k.p[i]);
  }
  return out;
}

std::uint64_t q_adic_degree(const WeylElement& a) {
  std::uint64_t best = kInfiniteDegree;
  for (const auto& [k, c] : a.terms()) best = std::min(best, k.q.degree());
  return best;
}

HPoly q_free_part(const WeylElement& a) {
  HPoly out(a.nvars());
  for (const auto& [k, c] : a.terms())
    if (k.q.is_zero()) out.add_term(k.p, c);
  return out;
}

HPoly q_only_poly(const WeylElement& a) {
  HPoly out(a.nvars());
  for (const auto& [k, c] : a.terms()) {
    if (!k.p.is_zero()) throw DimensionMismatch("element involves p: " + a.to_string());
    out.add_term(k.q, c);
  }
  return out;
}

WeylElement involution_sigma(const WeylElement& a) {
  // sigma(p^b q^a) = sigma(q)^a sigma(p)^b = (-1)^|b| q^a p^b, then reorder.
  std::size_t n = a.nvars();
  WeylElement out(n);
  for (const auto& [k, c] : a.terms()) {
    Rational s = k.p.degree() % 2 ? Rational(-c) : c;
    out += WeylElement::monomial(MultiIndex::zero(n), k.q, s) * WeylElement::monomial(k.p, MultiIndex::zero(n));
  }
  return out;
}

HPoly rep_apply(const WeylElement& a, const HPoly& v) {
  require_same_n(a.nvars(), v.nvars(), "rep_apply");
  HPoly out(a.nvars());
  for (const auto& [k, c] : a.terms())
    for (const auto& [mu, d] : v.terms()) {
      auto rest = mu.minus(k.q);
      if (!rest) continue;
      out.add_term(*rest + k.p, c * d * mu.falling_factorial(k.q));
    }
  return out;
}

// ---- MatWeyl ---------------------------------------------------------------

MatWeyl::MatWeyl(std::size_t n, std::size_t N) : n_(n), N_(N), e_(N * N, WeylElement(n)) {
  if (N == 0) throw DimensionMismatch("matrix size must be positive");
}

MatWeyl MatWeyl::identity(std::size_t n, std::size_t N) { return scalar(N, WeylElement::constant(n, Rational(1))); }

MatWeyl MatWeyl::scalar(std::size_t N, const WeylElement& w) {
  MatWeyl out(w.nvars(), N);
  for (std::size_t i = 0; i < N; ++i) out(i, i) = w;
  return out;
}

MatWeyl MatWeyl::unit(std::size_t N, std::size_t i, std::size_t j, const WeylElement& w) {
  if (i >= N || j >= N) throw IndexOutOfRange("matrix unit outside the matrix");
  MatWeyl out(w.nvars(), N);
  out(i, j) = w;
  return out;
}

MatWeyl MatWeyl::from_matrix(std::size_t n, const RatMatrix& m) {
  MatWeyl out(n, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = WeylElement::constant(n, m(i, j));
  return out;
}

bool MatWeyl::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const WeylElement& w) { return w.is_zero(); });
}

MatWeyl& MatWeyl::operator+=(const MatWeyl& o) {
  require_same_n(n_, o.n_, "MatWeyl +");
  if (N_ != o.N_) throw DimensionMismatch("matrix size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MatWeyl& MatWeyl::operator-=(const MatWeyl& o) {
  require_same_n(n_, o.n_, "MatWeyl -");
  if (N_ != o.N_) throw DimensionMismatch("matrix size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

MatWeyl& MatWeyl::operator*=(const Rational& c) {
  for (auto& w : e_) w *= c;
  return *this;
}

MatWeyl operator*(const MatWeyl& a, const MatWeyl& b) {
  require_same_n(a.n_, b.n_, "MatWeyl *");
  if (a.N_ != b.N_) throw DimensionMismatch("matrix size mismatch");
  MatWeyl out(a.n_, a.N_);
  for (std::size_t i = 0; i < a.N_; ++i)
    for (std::size_t k = 0; k < a.N_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.N_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string MatWeyl::to_string() const {
  if (N_ == 1) return e_[0].to_string();
  std::string out = "[";
  for (std::size_t i = 0; i < N_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < N_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

MatWeyl pow(const MatWeyl& a, unsigned k) {
  MatWeyl out = MatWeyl::identity(a.nvars(), a.size());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

MatWeyl weyl_derivation(const MatWeyl& a, std::size_t i) {
  MatWeyl out(a.nvars(), a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t s = 0; s < a.size(); ++s) out(r, s) = weyl_derivation(a(r, s), i);
  return out;
}

std::uint64_t q_adic_degree(const MatWeyl& a) {
  std::uint64_t best = kInfiniteDegree;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t s = 0; s < a.size(); ++s) best = std::min(best, q_adic_degree(a(r, s)));
  return best;
}

std::uint64_t total_degree(const MatWeyl& a) {
  std::uint64_t d = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t s = 0; s < a.size(); ++s) d = std::max(d, a(r, s).total_degree());
  return d;
}

MatWeyl involution_sigma(const MatWeyl& a) {
  MatWeyl out(a.nvars(), a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t s = 0; s < a.size(); ++s) out(r, s) = involution_sigma(a(s, r));
  return out;
}

MatWeyl commutator(const MatWeyl& a, const MatWeyl& b) { return a * b - b * a; }

MatWeyl jordan_product(const MatWeyl& a, const MatWeyl& b) { return (a * b + b * a) * Rational(1, 2); }

HVector basis_vector(std::size_t N, const MultiIndex& alpha, std::size_t j) {
  if (j >= N) throw IndexOutOfRange("basis vector index outside 1.." + std::to_string(N));
  HVector v(N, HPoly(alpha.size()));
  v[j] = HPoly::monomial(alpha);
  return v;
}

HVector rep_apply(const MatWeyl& a, const HVector& v) {
  if (v.size() != a.size()) throw DimensionMismatch("vector length does not match matrix size");
  HVector out(a.size(), HPoly(a.nvars()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += rep_apply(a(i, j), v[j]);
  return out;
}

// ---- PolyMatrix ------------------------------------------------------------

PolyMatrix PolyMatrix::diagonal(const std::vector<HPoly>& d) {
  if (d.empty()) throw DimensionMismatch("empty diagonal");
  PolyMatrix out(d[0].nvars(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    require_same_n(out.n_, d[i].nvars(), "PolyMatrix::diagonal");
    out(i, i) = d[i];
  }
  return out;
}

MatWeyl PolyMatrix::in_weyl() const {
  MatWeyl out(n_, N_);
  for (std::size_t i = 0; i < N_; ++i)
    for (std::size_t j = 0; j < N_; ++j) out(i, j) = WeylElement::from_p_poly((*this)(i, j));
  return out;
}

MatWeyl ideal_element(const MatWeyl& m, const PolyMatrix& Q) {
  if (m.size() != Q.size()) throw DimensionMismatch("matrix size mismatch");
  return m * Q.in_weyl();
}

}  // namespace tcalg
