#include "tcalg/structures.hpp"

#include <algorithm>

#include "tcalg/errors.hpp"
#include "tcalg/text.hpp"

namespace tcalg {

namespace {

void require_even(std::size_t n, std::size_t k) {
  if (n != 2 * k)
    throw DimensionMismatch("symplectic structure needs n = 2k (n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                            ")");
}

std::size_t half(std::size_t n) {
  if (n % 2) throw DimensionMismatch("symplectic structure needs an even number of variables, got " + std::to_string(n));
  return n / 2;
}

}  // namespace

HPoly poisson(const HPoly& f, const HPoly& g, std::size_t k) {
  require_even(f.nvars(), k);
  if (g.nvars() != f.nvars()) throw DimensionMismatch("poisson: variable count mismatch");
  HPoly out(f.nvars());
  for (std::size_t i = 0; i < k; ++i)
    out += partial_derivative(f, i) * partial_derivative(g, k + i) - partial_derivative(f, k + i) * partial_derivative(g, i);
  return out;
}

// ---- PolyDerivation --------------------------------------------------------

PolyDerivation::PolyDerivation(std::vector<HPoly> components) : f_(std::move(components)) {
  for (const auto& f : f_)
    if (f.nvars() != f_.size()) throw DimensionMismatch("derivation needs n components in n variables");
}

PolyDerivation PolyDerivation::basic(const HPoly& f, std::size_t i) {
  if (i >= f.nvars()) throw IndexOutOfRange("derivation index outside 1.." + std::to_string(f.nvars()));
  PolyDerivation D(f.nvars());
  D[i] = f;
  return D;
}

bool PolyDerivation::is_zero() const {
  return std::all_of(f_.begin(), f_.end(), [](const HPoly& f) { return f.is_zero(); });
}

PolyDerivation& PolyDerivation::operator+=(const PolyDerivation& o) {
  if (o.f_.size() != f_.size()) throw DimensionMismatch("derivation size mismatch");
  for (std::size_t i = 0; i < f_.size(); ++i) f_[i] += o.f_[i];
  return *this;
}

PolyDerivation& PolyDerivation::operator-=(const PolyDerivation& o) {
  if (o.f_.size() != f_.size()) throw DimensionMismatch("derivation size mismatch");
  for (std::size_t i = 0; i < f_.size(); ++i) f_[i] -= o.f_[i];
  return *this;
}

PolyDerivation& PolyDerivation::operator*=(const Rational& c) {
  for (auto& f : f_) f *= c;
  return *this;
}

std::string PolyDerivation::to_string() const {
  std::vector<text::Term> terms;
  for (std::size_t i = 0; i < f_.size(); ++i) {
    std::string d = "d" + std::to_string(i + 1);
    for (const auto& [a, c] : f_[i].terms()) {
      std::string m = monomial_string(a, "T");
      terms.push_back({c, m.empty() ? d : m + "*" + d});
    }
  }
  return text::join(terms);
}

HPoly der_apply(const PolyDerivation& D, const HPoly& f) {
  if (f.nvars() != D.nvars()) throw DimensionMismatch("der_apply: variable count mismatch");
  HPoly out(f.nvars());
  for (std::size_t i = 0; i < D.nvars(); ++i)
    if (!D[i].is_zero()) out += D[i] * partial_derivative(f, i);
  return out;
}

PolyDerivation der_bracket(const PolyDerivation& D1, const PolyDerivation& D2) {
  if (D1.nvars() != D2.nvars()) throw DimensionMismatch("derivation size mismatch");
  PolyDerivation out(D1.nvars());
  for (std::size_t j = 0; j < D1.nvars(); ++j) out[j] = der_apply(D1, D2[j]) - der_apply(D2, D1[j]);
  return out;
}

HPoly divergence(const PolyDerivation& D) {
  HPoly out(D.nvars());
  for (std::size_t i = 0; i < D.nvars(); ++i) out += partial_derivative(D[i], i);
  return out;
}

bool is_in_Sn(const PolyDerivation& D) { return divergence(D).is_zero(); }

// ---- DifferentialForm ------------------------------------------------------

DifferentialForm DifferentialForm::monomial(const HPoly& f, Indices indices, std::size_t n) {
  DifferentialForm w(n, indices.size());
  w.add_term(std::move(indices), f);
  return w;
}

DifferentialForm DifferentialForm::symplectic(std::size_t k) {
  std::size_t n = 2 * k;
  DifferentialForm s(n, 2);
  for (std::uint32_t i = 0; i < k; ++i) s.add_term({i, static_cast<std::uint32_t>(k + i)}, HPoly::constant(n, Rational(1)));
  return s;
}

DifferentialForm DifferentialForm::volume(std::size_t n) {
  Indices all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  return monomial(HPoly::constant(n, Rational(1)), all, n);
}

void DifferentialForm::add_term(Indices indices, const HPoly& f) {
  if (indices.size() != degree_) throw DimensionMismatch("form degree mismatch");
  if (f.nvars() != n_) throw DimensionMismatch("form coefficient has the wrong variable count");
  for (auto i : indices)
    if (i >= n_) throw IndexOutOfRange("dT index outside 1.." + std::to_string(n_));
  // Bubble sort, tracking the sign of the permutation.
  bool negative = false;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b + 1 < indices.size() - a; ++b) {
      if (indices[b] == indices[b + 1]) return;
      if (indices[b] > indices[b + 1]) {
        std::swap(indices[b], indices[b + 1]);
        negative = !negative;
      }
    }
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(indices, negative ? -f : f);
  if (!inserted) {
    it->second += negative ? -f : f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw DimensionMismatch("form mismatch");
  for (const auto& [I, f] : o.terms_) add_term(I, f);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw DimensionMismatch("form mismatch");
  for (const auto& [I, f] : o.terms_) add_term(I, -f);
  return *this;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [I, f] : terms_) {
    std::string basis;
    for (std::size_t a = 0; a < I.size(); ++a) basis += (a ? "^dT" : "dT") + std::to_string(I[a] + 1);
    std::string coeff = f.to_string();
    std::string term;
    if (basis.empty())
      term = coeff;
    else if (coeff == "1")
      term = basis;
    else if (coeff == "-1")
      term = "-" + basis;
    else
      term = text::parenthesize_sum(coeff) + " " + basis;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

DifferentialForm exterior_d(const DifferentialForm& w) {
  DifferentialForm out(w.nvars(), w.degree() + 1);
  for (const auto& [I, f] : w.terms())
    for (std::uint32_t i = 0; i < w.nvars(); ++i) {
      HPoly df = partial_derivative(f, i);
      if (df.is_zero()) continue;
      DifferentialForm::Indices J{i};
      J.insert(J.end(), I.begin(), I.end());
      out.add_term(J, df);
    }
  return out;
}

DifferentialForm contract_symplectic(const PolyDerivation& D) {
  std::size_t n = D.nvars(), k = half(n);
  DifferentialForm out(n, 1);
  for (std::uint32_t i = 0; i < k; ++i) {
    out.add_term({static_cast<std::uint32_t>(k + i)}, D[i]);
    out.add_term({i}, -D[k + i]);
  }
  return out;
}

bool is_in_Hn(const PolyDerivation& D) { return exterior_d(contract_symplectic(D)).is_zero(); }

PolyDerivation hamiltonian_field(const HPoly& f, std::size_t k) {
  require_even(f.nvars(), k);
  PolyDerivation D(f.nvars());
  for (std::size_t i = 0; i < k; ++i) {
    D[k + i] = partial_derivative(f, i);
    D[i] = -partial_derivative(f, k + i);
  }
  return D;
}

CheckResult check_poisson_homomorphism(const HPoly& f, const HPoly& g, std::size_t k) {
  PolyDerivation lhs = hamiltonian_field(poisson(f, g, k), k);
  PolyDerivation rhs = der_bracket(hamiltonian_field(f, k), hamiltonian_field(g, k));
  CheckResult r{"D_{f,g} = [D_f, D_g]", lhs == rhs, ""};
  if (!r.passed) r.certificate = "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
  return r;
}

// ---- sigma parts -----------------------------------------------------------

MatWeyl skew_part(const MatWeyl& a) { return (a - involution_sigma(a)) * Rational(1, 2); }

MatWeyl sym_part(const MatWeyl& a) { return (a + involution_sigma(a)) * Rational(1, 2); }

CheckResult check_commutation_identity(const MatWeyl& a, std::size_t i) {
  MatWeyl p = MatWeyl::scalar(a.size(), WeylElement::p(a.nvars(), i));
  MatWeyl lhs = a * p, rhs = p * a + weyl_derivation(a, i);
  CheckResult r{"a p_i = p_i a + d_i(a)", lhs == rhs, ""};
  if (!r.passed) r.certificate = "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
  return r;
}

// ---- constructors on conformal elements ------------------------------------

ConformalElement matrix_tc_embed(const ConformalElement& a, std::size_t N) {
  Backend b = a.backend();
  b.N *= N;
  ConformalElement out(b);
  for (const auto& [k, m] : a.coeffs()) out.add_term(k.gamma, k.beta, m.kron_identity(N));
  return out;
}

ConformalElement matrix_tc_embed(const ConformalElement& a, std::size_t N, std::size_t i, std::size_t j) {
  if (a.backend().N != 1) throw DimensionMismatch("unit-position embedding needs a scalar element");
  if (i >= N || j >= N) throw IndexOutOfRange("matrix position outside the matrix");
  Backend b = a.backend();
  b.N = N;
  ConformalElement out(b);
  for (const auto& [k, m] : a.coeffs()) out.add_term(k.gamma, k.beta, RatMatrix::unit(N, i, j) * m(0, 0));
  return out;
}

ConformalElement poly_extension(const ConformalElement& a, std::size_t n) {
  if (n < a.backend().n)
    throw DimensionMismatch("cannot extend from " + std::to_string(a.backend().n) + " to " + std::to_string(n) +
                            " variables");
  Backend b = a.backend();
  b.n = n;
  ConformalElement out(b);
  for (const auto& [k, m] : a.coeffs()) out.add_term(k.gamma.resized(n), k.beta.resized(n), m);
  return out;
}

// ---- W_n -------------------------------------------------------------------

WeylElement wn_basic_map(std::size_t i, const MultiIndex& alpha) {
  std::size_t n = alpha.size();
  if (i >= n) throw IndexOutOfRange("index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
  return WeylElement::monomial(alpha, MultiIndex::unit(n, i));
}

CheckResult check_wn_invariance(std::size_t i, const MultiIndex& alpha) {
  std::size_t n = alpha.size();
  WeylElement a = wn_basic_map(i, alpha);
  CheckResult r{"[q_j, p^alpha q_i] = alpha_j p^(alpha - e_j) q_i", true, ""};
  for (std::size_t j = 0; j < n && r.passed; ++j) {
    WeylElement lhs = WeylElement::q(n, j) * a - a * WeylElement::q(n, j);
    WeylElement rhs(n);
    if (alpha[j] > 0) {
      MultiIndex lower = alpha;
      lower[j] -= 1;
      rhs = WeylElement::monomial(lower, MultiIndex::unit(n, i), Rational(alpha[j]));
    }
    if (!(lhs == rhs)) {
      r.passed = false;
      r.certificate = "j = " + std::to_string(j + 1) + ": lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
    }
  }
  return r;
}

WeylElement to_weyl(const PolyDerivation& D) {
  std::size_t n = D.nvars();
  WeylElement out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [a, c] : D[i].terms()) out.add_term({a, MultiIndex::unit(n, i)}, c);
  return out;
}

PolyDerivation from_weyl(const WeylElement& w) {
  std::size_t n = w.nvars();
  PolyDerivation D(n);
  for (const auto& [k, c] : w.terms()) {
    if (k.q.degree() != 1) throw DimensionMismatch(w.to_string() + " is not of the form sum f_i(p) q_i");
    std::size_t i = 0;
    while (k.q[i] == 0) ++i;
    D[i].add_term(k.p, c);
  }
  return D;
}

}  // namespace tcalg
