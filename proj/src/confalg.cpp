#include "tcalg/confalg.hpp"

#include <algorithm>

#include "tcalg/errors.hpp"
#include "tcalg/text.hpp"

namespace tcalg {

namespace {

Rational sign_of_degree(std::uint64_t d) { return d % 2 == 0 ? Rational(1) : Rational(-1); }

void require_same(const Backend& a, const Backend& b) {
  if (!(a == b)) throw DimensionMismatch("backend mismatch: " + backend_name(a) + " vs " + backend_name(b));
}

void require_vars(const Backend& b, std::size_t n, const char* what) {
  if (b.n != n)
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(b.n) + " variables, got " +
                            std::to_string(n));
}

std::string matrix_text(std::size_t N, const std::vector<std::string>& entries) {
  if (N == 1) return entries[0];
  std::string out = "[";
  for (std::size_t i = 0; i < N; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < N; ++j) out += (j ? ", " : "") + entries[i * N + j];
    out += "]";
  }
  return out + "]";
}

std::string verdict_pair(const std::string& lhs, const std::string& rhs) { return "lhs = " + lhs + "; rhs = " + rhs; }

CheckResult compare(const std::string& identity, const ConformalElement& lhs, const ConformalElement& rhs) {
  CheckResult r{identity, lhs == rhs, ""};
  if (!r.passed) r.certificate = verdict_pair(lhs.to_string(), rhs.to_string());
  return r;
}

}  // namespace

std::string backend_name(const Backend& b) {
  return std::string(b.kind == BackendKind::CendWeyl ? "cend" : "cur") + "(n=" + std::to_string(b.n) +
         ", N=" + std::to_string(b.N) + ")";
}

// ---- ConformalElement ------------------------------------------------------

bool ConformalElement::KeyOrder::operator()(const Key& a, const Key& b) const {
  GrLexGreater g;
  if (a.gamma != b.gamma) return g(a.gamma, b.gamma);
  return g(a.beta, b.beta);
}

ConformalElement ConformalElement::basic(const Backend& b, const MultiIndex& beta, const RatMatrix& M) {
  ConformalElement out(b);
  out.add_term(MultiIndex::zero(b.n), beta, M);
  return out;
}

ConformalElement ConformalElement::basic(const Backend& b, const PolyMatrix& P) {
  if (P.size() != b.N) throw DimensionMismatch("matrix size does not match the backend");
  require_vars(b, P.nvars(), "a[...]");
  ConformalElement out(b);
  for (std::size_t i = 0; i < b.N; ++i)
    for (std::size_t j = 0; j < b.N; ++j)
      for (const auto& [beta, c] : P(i, j).terms()) {
        RatMatrix M(b.N);
        M(i, j) = c;
        out.add_term(MultiIndex::zero(b.n), beta, M);
      }
  return out;
}

void ConformalElement::add_term(const MultiIndex& gamma, const MultiIndex& beta, const RatMatrix& M) {
  require_vars(backend_, gamma.size(), "ConformalElement::add_term");
  require_vars(backend_, beta.size(), "ConformalElement::add_term");
  if (M.size() != backend_.N) throw DimensionMismatch("coefficient matrix size does not match the backend");
  if (M.is_zero()) return;
  if (backend_.kind == BackendKind::CurPoly && !beta.is_zero())
    throw DimensionMismatch("the current backend has no p variables");
  Key k{gamma, beta};
  auto [it, inserted] = coeffs_.try_emplace(k, M);
  if (!inserted) {
    it->second += M;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

std::uint64_t ConformalElement::t_degree() const {
  std::uint64_t d = 0;
  for (const auto& [k, m] : coeffs_) d = std::max(d, k.gamma.degree());
  return d;
}

std::uint64_t ConformalElement::p_degree() const {
  std::uint64_t d = 0;
  for (const auto& [k, m] : coeffs_) d = std::max(d, k.beta.degree());
  return d;
}

void ConformalElement::require_same_backend(const ConformalElement& o) const { require_same(backend_, o.backend_); }

ConformalElement& ConformalElement::operator+=(const ConformalElement& o) {
  require_same_backend(o);
  for (const auto& [k, m] : o.coeffs_) add_term(k.gamma, k.beta, m);
  return *this;
}

ConformalElement& ConformalElement::operator-=(const ConformalElement& o) {
  require_same_backend(o);
  for (const auto& [k, m] : o.coeffs_) add_term(k.gamma, k.beta, -m);
  return *this;
}

ConformalElement& ConformalElement::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, m] : coeffs_) m *= c;
  return *this;
}

std::string ConformalElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<MultiIndex> gammas;
  for (const auto& [k, m] : coeffs_)
    if (gammas.empty() || gammas.back() != k.gamma) gammas.push_back(k.gamma);
  std::string out;
  for (const auto& gamma : gammas) {
    PolyMatrix P = argument_at(*this, gamma);
    std::vector<std::string> entries;
    for (std::size_t i = 0; i < backend_.N; ++i)
      for (std::size_t j = 0; j < backend_.N; ++j) entries.push_back(P(i, j).to_string("p"));
    std::string t = monomial_string(gamma, "T");
    if (!out.empty()) out += " + ";
    out += (t.empty() ? "" : t + " . ") + "a[" + matrix_text(backend_.N, entries) + "]";
  }
  return out;
}

PolyMatrix argument_at(const ConformalElement& c, const MultiIndex& gamma) {
  const Backend& b = c.backend();
  PolyMatrix P(b.n, b.N);
  for (const auto& [k, m] : c.coeffs()) {
    if (k.gamma != gamma) continue;
    for (std::size_t i = 0; i < b.N; ++i)
      for (std::size_t j = 0; j < b.N; ++j) P(i, j).add_term(k.beta, m(i, j));
  }
  return P;
}

std::string format_value(const Backend& b, const MatWeyl& v) {
  if (b.kind == BackendKind::CendWeyl) return v.to_string();
  std::vector<std::string> entries;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) entries.push_back(q_only_poly(v(i, j)).to_string("T"));
  return matrix_text(v.size(), entries);
}

// ---- evaluation ------------------------------------------------------------

MatWeyl eval(const ConformalElement& c, const HPoly& f) {
  const Backend& b = c.backend();
  require_vars(b, f.nvars(), "eval");
  MatWeyl out(b.n, b.N);
  for (const auto& [alpha, d] : f.terms())
    for (const auto& [k, m] : c.coeffs()) {
      auto rest = alpha.minus(k.gamma);
      if (!rest) continue;
      Rational s = sign_of_degree(k.gamma.degree()) * alpha.falling_factorial(k.gamma) * d;
      WeylKey key{k.beta, *rest};
      for (std::size_t i = 0; i < b.N; ++i)
        for (std::size_t j = 0; j < b.N; ++j)
          if (!tcalg::is_zero(m(i, j))) out(i, j).add_term(key, s * m(i, j));
    }
  return out;
}

ConformalElement haction(std::size_t i, const ConformalElement& c) {
  const Backend& b = c.backend();
  if (i >= b.n) throw IndexOutOfRange("H-action index " + std::to_string(i + 1) + " outside 1.." + std::to_string(b.n));
  return haction(HPoly::variable(b.n, i), c);
}

ConformalElement haction(const HPoly& h, const ConformalElement& c) {
  const Backend& b = c.backend();
  require_vars(b, h.nvars(), "H-action");
  ConformalElement out(b);
  for (const auto& [mu, d] : h.terms())
    for (const auto& [k, m] : c.coeffs()) out.add_term(k.gamma + mu, k.beta, m * d);
  return out;
}

EvalTable eval_table(const ConformalElement& c, std::uint64_t window) {
  EvalTable t;
  t.window = window;
  for (const auto& alpha : monomials_up_to(c.backend().n, window)) t.values.emplace(alpha, eval(c, HPoly::monomial(alpha)));
  return t;
}

ConformalElement reconstruct(const Backend& b, const EvalTable& t) {
  for (const auto& [alpha, v] : t.values) {
    require_vars(b, alpha.size(), "reconstruct");
    require_vars(b, v.nvars(), "reconstruct");
    if (v.size() != b.N) throw DimensionMismatch("table value has the wrong matrix size");
  }
  if (t.window) {
    for (const auto& alpha : monomials_up_to(b.n, *t.window))
      if (!t.values.count(alpha))
        throw NotReconstructible("table misses T^(" + monomial_string(alpha, "T") + ") inside its window");
  }

  ConformalElement c(b);
  for (const auto& [alpha, v] : t.values) {
    Rational scale = sign_of_degree(alpha.degree()) / alpha.factorial();
    bool top = t.window && alpha.degree() == *t.window;
    for (std::size_t i = 0; i < b.N; ++i)
      for (std::size_t j = 0; j < b.N; ++j) {
        const WeylElement& w = v(i, j);
        if (b.kind == BackendKind::CurPoly && w.p_degree() > 0)
          throw InconsistentTable("value " + w.to_string() + " lies outside the current target");
        HPoly qf = q_free_part(w);
        if (qf.is_zero()) continue;
        if (top)
          throw NotReconstructible("q-free part " + qf.to_string("p") + " persists on the window boundary |alpha| = " +
                                   std::to_string(*t.window));
        for (const auto& [beta, x] : qf.terms()) {
          RatMatrix M(b.N);
          M(i, j) = scale * x;
          c.add_term(alpha, beta, M);
        }
      }
  }

  for (const auto& [alpha, v] : t.values)
    if (!(eval(c, HPoly::monomial(alpha)) == v)) {
      std::string at = alpha.is_zero() ? std::string("1") : monomial_string(alpha, "T");
      throw InconsistentTable("value at " + at + " is not the value of a T-invariant map");
    }
  return c;
}

// ---- products --------------------------------------------------------------

ConformalElement fproduct(const ConformalElement& a, const ConformalElement& b, const HPoly& f) {
  const Backend& be = a.backend();
  require_same(be, b.backend());
  require_vars(be, f.nvars(), "fproduct");
  if (a.is_zero() || b.is_zero() || f.is_zero()) return ConformalElement(be);

  std::uint64_t window = a.t_degree() + b.t_degree() + f.degree() + a.p_degree() + b.p_degree() + 1;
  HTensor d = coproduct(f);
  std::map<MultiIndex, MatWeyl> a_values;
  for (const auto& [k, c] : d.terms())
    if (!a_values.count(k[0])) a_values.emplace(k[0], eval(a, HPoly::monomial(k[0])));

  EvalTable t;
  t.window = window;
  for (const auto& alpha : monomials_up_to(be.n, window)) {
    MatWeyl v(be.n, be.N);
    for (const auto& [k, c] : d.terms()) {
      const MatWeyl& x = a_values.at(k[0]);
      if (x.is_zero()) continue;
      MatWeyl y = eval(b, HPoly::monomial(k[1] + alpha));
      if (y.is_zero()) continue;
      v += (x * y) * (c * sign_of_degree(k[1].degree()));
    }
    t.values.emplace(alpha, std::move(v));
  }
  return reconstruct(be, t);
}

ConformalElement xproduct(const ConformalElement& a, const ConformalElement& b, const DualPoly& x) {
  return fproduct(a, b, from_dual(x));
}

ConformalElement nproduct(const ConformalElement& a, const ConformalElement& b, unsigned k) {
  if (a.backend().n != 1)
    throw SessionError("n-products are defined for one-variable sessions only (n = " + std::to_string(a.backend().n) +
                       ")");
  return fproduct(a, b, HPoly::monomial(MultiIndex{k}));
}

std::uint64_t locality_bound(const ConformalElement& a, const ConformalElement& b) {
  return a.t_degree() + b.t_degree() + a.p_degree() + b.p_degree();
}

std::vector<MultiIndex> locality_set(const ConformalElement& a, const ConformalElement& b) {
  require_same(a.backend(), b.backend());
  std::vector<MultiIndex> out;
  if (a.is_zero() || b.is_zero()) return out;
  auto probes = monomials_up_to(a.backend().n, locality_bound(a, b) + 1);
  std::reverse(probes.begin(), probes.end());
  for (const auto& lambda : probes)
    if (!fproduct(a, b, HPoly::monomial(lambda)).is_zero()) out.push_back(lambda);
  return out;
}

// ---- verifiers -------------------------------------------------------------

CheckResult check_evaluation_identity(const ConformalElement& a, const ConformalElement& b, const HPoly& f,
                                      const HPoly& g) {
  const Backend& be = a.backend();
  require_same(be, b.backend());
  MatWeyl lhs = eval(a, f) * eval(b, g);
  MatWeyl rhs(be.n, be.N);
  HTensor d = coproduct(f);
  std::map<MultiIndex, ConformalElement> products;
  for (const auto& [k, c] : d.terms()) {
    auto it = products.find(k[0]);
    if (it == products.end()) it = products.emplace(k[0], fproduct(a, b, HPoly::monomial(k[0]))).first;
    rhs += eval(it->second, HPoly::monomial(k[1]) * g) * c;
  }
  CheckResult r{"a(f) b(g) = (a_(f1) b)(f2 g)", lhs == rhs, ""};
  if (!r.passed) r.certificate = verdict_pair(format_value(be, lhs), format_value(be, rhs));
  return r;
}

std::vector<CheckResult> check_H0(const ConformalElement& a, const ConformalElement& a2, const ConformalElement& b,
                                  const ConformalElement& b2, const HPoly& f, const HPoly& f2, const Rational& s,
                                  const Rational& t) {
  std::vector<CheckResult> out;
  out.push_back(compare("(s a + t a')_(f) b = s a_(f) b + t a'_(f) b", fproduct(a * s + a2 * t, b, f),
                        fproduct(a, b, f) * s + fproduct(a2, b, f) * t));
  out.push_back(compare("a_(f) (s b + t b') = s a_(f) b + t a_(f) b'", fproduct(a, b * s + b2 * t, f),
                        fproduct(a, b, f) * s + fproduct(a, b2, f) * t));
  out.push_back(compare("a_(s f + t f') b = s a_(f) b + t a_(f') b", fproduct(a, b, f * s + f2 * t),
                        fproduct(a, b, f) * s + fproduct(a, b, f2) * t));
  return out;
}

namespace {

using DualAction = DualPoly (*)(const DualPoly&, const HPoly&);

std::pair<ConformalElement, ConformalElement> h2_left(const ConformalElement& a, const ConformalElement& b,
                                                      const HPoly& h, const DualPoly& x, DualAction act) {
  return {xproduct(haction(h, a), b, x), xproduct(a, b, act(x, h))};
}

std::pair<ConformalElement, ConformalElement> h2_right(const ConformalElement& a, const ConformalElement& b,
                                                       const HPoly& h, const DualPoly& x, DualAction act) {
  ConformalElement rhs(a.backend());
  HTensor d = coproduct(h);
  for (const auto& [k, c] : d.terms()) {
    DualPoly y = act(x, antipode(HPoly::monomial(k[0])));
    rhs += haction(HPoly::monomial(k[1]), xproduct(a, b, y)) * c;
  }
  return {xproduct(a, haction(h, b), x), rhs};
}

CheckResult h2_result(const std::string& identity, const std::pair<ConformalElement, ConformalElement>& twisted,
                      const std::pair<ConformalElement, ConformalElement>& untwisted) {
  CheckResult r{identity, twisted.first == twisted.second, ""};
  if (!r.passed)
    r.certificate = verdict_pair(twisted.first.to_string(), twisted.second.to_string()) +
                    "; convention <x.h, f> = <x, S(h) f> fails, <x.h, f> = <x, h f> " +
                    (untwisted.first == untwisted.second ? "holds" : "also fails");
  return r;
}

}  // namespace

std::vector<CheckResult> check_H2(const ConformalElement& a, const ConformalElement& b, const HPoly& h,
                                  const MultiIndex& lambda) {
  require_same(a.backend(), b.backend());
  require_vars(a.backend(), lambda.size(), "check_H2");
  DualPoly x = DualPoly::monomial(lambda);
  std::vector<CheckResult> out;
  auto left = h2_left(a, b, h, x, dual_h_action);
  auto right = h2_right(a, b, h, x, dual_h_action);
  out.push_back(h2_result("(h a)_(x) b = a_(x h) b", left,
                          left.first == left.second ? left : h2_left(a, b, h, x, dual_h_action_untwisted)));
  out.push_back(h2_result("a_(x) (h b) = h2 (a_(S(h1) x) b)", right,
                          right.first == right.second ? right : h2_right(a, b, h, x, dual_h_action_untwisted)));
  return out;
}

CheckResult check_C2(const ConformalElement& a, const ConformalElement& b, unsigned k) {
  ConformalElement lhs = nproduct(haction(0, a), b, k);
  ConformalElement rhs(a.backend());
  if (k > 0) rhs = nproduct(a, b, k - 1) * Rational(-static_cast<long>(k));
  CheckResult r = compare("T a_(k) b = -k a_(k-1) b", lhs, rhs);
  if (!r.passed) r.certificate = "k = " + std::to_string(k) + ": " + r.certificate;
  return r;
}

CheckResult check_C3(const ConformalElement& a, const ConformalElement& b, unsigned k) {
  ConformalElement lhs = nproduct(a, haction(0, b), k);
  ConformalElement rhs = haction(0, nproduct(a, b, k));
  if (k > 0) rhs += nproduct(a, b, k - 1) * Rational(k);
  CheckResult r = compare("a_(k) T b = T(a_(k) b) + k a_(k-1) b", lhs, rhs);
  if (!r.passed) r.certificate = "k = " + std::to_string(k) + ": " + r.certificate;
  return r;
}

CheckResult check_T_invariance(const Backend& b, const EvalTable& t) {
  CheckResult r{"table is the restriction of a T-invariant map", true, ""};
  try {
    reconstruct(b, t);
  } catch (const InconsistentTable& e) {
    r.passed = false;
    r.certificate = e.what();
  } catch (const NotReconstructible& e) {
    r.passed = false;
    r.certificate = e.what();
  }
  return r;
}

std::vector<std::pair<ConformalElement, HPoly>> tc_witness(const Backend& b, const MatWeyl& target) {
  require_vars(b, target.nvars(), "tc_witness");
  if (target.size() != b.N) throw DimensionMismatch("target matrix size does not match the backend");
  std::map<MultiIndex, ConformalElement, GrLexGreater> by_alpha;
  for (std::size_t i = 0; i < b.N; ++i)
    for (std::size_t j = 0; j < b.N; ++j)
      for (const auto& [k, c] : target(i, j).terms()) {
        RatMatrix M(b.N);
        M(i, j) = c;
        auto it = by_alpha.try_emplace(k.q, b).first;
        it->second.add_term(MultiIndex::zero(b.n), k.p, M);
      }
  std::vector<std::pair<ConformalElement, HPoly>> out;
  for (auto& [alpha, c] : by_alpha) out.emplace_back(std::move(c), HPoly::monomial(alpha));
  return out;
}

}  // namespace tcalg
