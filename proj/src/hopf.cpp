#include "tcalg/hopf.hpp"

#include "tcalg/errors.hpp"
#include "tcalg/text.hpp"

namespace tcalg {

namespace {

void require_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": variable count mismatch (" + std::to_string(a) + " vs " +
                            std::to_string(b) + ")");
}

Rational sign_of_degree(std::uint64_t d) { return d % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

// ---- HPoly -----------------------------------------------------------------

HPoly HPoly::constant(std::size_t n, const Rational& c) {
  HPoly out(n);
  out.add_term(MultiIndex::zero(n), c);
  return out;
}

HPoly HPoly::monomial(const MultiIndex& alpha, const Rational& c) {
  HPoly out(alpha.size());
  out.add_term(alpha, c);
  return out;
}

HPoly HPoly::variable(std::size_t n, std::size_t i) { return monomial(MultiIndex::unit(n, i)); }

Rational HPoly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HPoly::add_term(const MultiIndex& alpha, const Rational& c) {
  require_same_n(n_, alpha.size(), "HPoly::add_term");
  accumulate(terms_, alpha, c);
}

std::uint64_t HPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

HPoly& HPoly::operator+=(const HPoly& other) {
  require_same_n(n_, other.n_, "HPoly +");
  for (const auto& [a, c] : other.terms_) accumulate(terms_, a, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
  require_same_n(n_, other.n_, "HPoly -");
  for (const auto& [a, c] : other.terms_) accumulate(terms_, a, Rational(-c));
  return *this;
}

HPoly& HPoly::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

HPoly& HPoly::operator*=(const HPoly& other) { return *this = *this * other; }

HPoly operator*(const HPoly& a, const HPoly& b) {
  require_same_n(a.n_, b.n_, "HPoly *");
  HPoly out(a.n_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) accumulate(out.terms_, x + y, Rational(c * d));
  return out;
}

std::string HPoly::to_string(const std::string& var) const {
  std::vector<text::Term> terms;
  for (const auto& [a, c] : terms_) terms.push_back({c, monomial_string(a, var)});
  return text::join(terms);
}

HPoly pow(const HPoly& f, unsigned k) {
  HPoly out = HPoly::constant(f.nvars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out *= f;
  return out;
}

HPoly partial_derivative(const HPoly& f, std::size_t i) {
  if (i >= f.nvars())
    throw IndexOutOfRange("derivative index " + std::to_string(i + 1) + " outside 1.." + std::to_string(f.nvars()));
  HPoly out(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (a[i] == 0) continue;
    MultiIndex b = a;
    b[i] -= 1;
    out.add_term(b, c * a[i]);
  }
  return out;
}

std::uint64_t aug_degree(const HPoly& f) {
  std::uint64_t best = kInfiniteDegree;
  for (const auto& [a, c] : f.terms()) best = std::min(best, a.degree());
  return best;
}

Rational counit(const HPoly& f) { return f.coefficient(MultiIndex::zero(f.nvars())); }

HPoly antipode(const HPoly& f) {
  HPoly out(f.nvars());
  for (const auto& [a, c] : f.terms()) out.add_term(a, sign_of_degree(a.degree()) * c);
  return out;
}

// ---- HTensor ---------------------------------------------------------------

bool HTensor::KeyLess::operator()(const Key& a, const Key& b) const {
  GrLexGreater leg;
  std::uint64_t da = 0, db = 0;
  for (const auto& x : a) da += x.degree();
  for (const auto& y : b) db += y.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (leg(a[i], b[i])) return true;
    if (leg(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

Rational HTensor::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HTensor::add_term(const Key& k, const Rational& c) {
  if (k.size() != arity_) throw DimensionMismatch("tensor arity mismatch");
  for (const auto& leg : k) require_same_n(n_, leg.size(), "HTensor::add_term");
  accumulate(terms_, k, c);
}

HTensor& HTensor::operator+=(const HTensor& other) {
  if (other.arity_ != arity_) throw DimensionMismatch("tensor arity mismatch");
  require_same_n(n_, other.n_, "HTensor +");
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, c);
  return *this;
}

HTensor& HTensor::operator-=(const HTensor& other) {
  if (other.arity_ != arity_) throw DimensionMismatch("tensor arity mismatch");
  require_same_n(n_, other.n_, "HTensor -");
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

HTensor& HTensor::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

HTensor operator*(const HTensor& a, const HTensor& b) {
  if (a.arity_ != b.arity_) throw DimensionMismatch("tensor arity mismatch");
  require_same_n(a.n_, b.n_, "HTensor *");
  HTensor out(a.n_, a.arity_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) {
      HTensor::Key k(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) k[i] = x[i] + y[i];
      accumulate(out.terms_, k, Rational(c * d));
    }
  return out;
}

std::string HTensor::to_string() const {
  std::vector<text::Term> terms;
  for (const auto& [k, c] : terms_) {
    std::string body;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0) body += " (x) ";
      auto m = monomial_string(k[i], "T");
      body += m.empty() ? "1" : m;
    }
    // A tensor of constants still prints its legs, so a lone coefficient must
    // stay attached.
    terms.push_back({c, body});
  }
  return text::join(terms);
}

HTensor tensor(const std::vector<HPoly>& legs) {
  if (legs.empty()) throw DimensionMismatch("tensor of zero legs");
  std::size_t n = legs.front().nvars();
  HTensor out(n, legs.size());
  std::vector<std::pair<HTensor::Key, Rational>> acc{{{}, Rational(1)}};
  for (const auto& leg : legs) {
    require_same_n(n, leg.nvars(), "tensor");
    std::vector<std::pair<HTensor::Key, Rational>> next;
    for (const auto& [k, c] : acc)
      for (const auto& [a, d] : leg.terms()) {
        auto k2 = k;
        k2.push_back(a);
        next.emplace_back(std::move(k2), c * d);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

HTensor permute_legs(const HTensor& u, const std::vector<std::size_t>& perm) {
  if (perm.size() != u.arity()) throw DimensionMismatch("leg permutation has wrong length");
  HTensor out(u.nvars(), u.arity());
  for (const auto& [k, c] : u.terms()) {
    HTensor::Key k2(k.size());
    for (std::size_t j = 0; j < perm.size(); ++j) k2[j] = k.at(perm[j]);
    out.add_term(k2, c);
  }
  return out;
}

namespace {

// Coproduct of a single monomial: sum over beta <= alpha of binom(alpha, beta)
// T^beta (x) T^{alpha - beta}; Delta is the algebra map with T_i primitive.
std::vector<std::pair<std::pair<MultiIndex, MultiIndex>, Rational>> coproduct_monomial(const MultiIndex& alpha) {
  std::vector<std::pair<std::pair<MultiIndex, MultiIndex>, Rational>> out;
  for (const auto& beta : sub_indices(alpha)) out.push_back({{beta, *alpha.minus(beta)}, alpha.binomial(beta)});
  return out;
}

}  // namespace

HTensor coproduct_on_leg(const HTensor& u, std::size_t i) {
  if (i >= u.arity()) throw IndexOutOfRange("tensor leg out of range");
  HTensor out(u.nvars(), u.arity() + 1);
  for (const auto& [k, c] : u.terms())
    for (const auto& [legs, b] : coproduct_monomial(k[i])) {
      HTensor::Key k2;
      k2.reserve(k.size() + 1);
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (j == i) {
          k2.push_back(legs.first);
          k2.push_back(legs.second);
        } else {
          k2.push_back(k[j]);
        }
      }
      out.add_term(k2, c * b);
    }
  return out;
}

HTensor counit_on_leg(const HTensor& u, std::size_t i) {
  if (i >= u.arity() || u.arity() < 2) throw IndexOutOfRange("tensor leg out of range");
  HTensor out(u.nvars(), u.arity() - 1);
  for (const auto& [k, c] : u.terms()) {
    if (!k[i].is_zero()) continue;
    HTensor::Key k2;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (j != i) k2.push_back(k[j]);
    out.add_term(k2, c);
  }
  return out;
}

HTensor antipode_on_leg(const HTensor& u, std::size_t i) {
  if (i >= u.arity()) throw IndexOutOfRange("tensor leg out of range");
  HTensor out(u.nvars(), u.arity());
  for (const auto& [k, c] : u.terms()) out.add_term(k, sign_of_degree(k[i].degree()) * c);
  return out;
}

HPoly multiply_legs(const HTensor& u) {
  HPoly out(u.nvars());
  for (const auto& [k, c] : u.terms()) {
    MultiIndex a = MultiIndex::zero(u.nvars());
    for (const auto& leg : k) a = a + leg;
    out.add_term(a, c);
  }
  return out;
}

HPoly as_poly(const HTensor& u) {
  if (u.arity() != 1) throw DimensionMismatch("as_poly needs a one-leg tensor");
  return multiply_legs(u);
}

HTensor coproduct(const HPoly& f) { return iterated_coproduct(f, 1); }

HTensor iterated_coproduct(const HPoly& f, unsigned k) {
  HTensor out = tensor({f});
  // (id (x) Delta^{k-1}) Delta: split the last leg repeatedly.
  for (unsigned step = 0; step < k; ++step) out = coproduct_on_leg(out, out.arity() - 1);
  return out;
}

HTensor phi(const HTensor& u) {
  if (u.arity() != 2) throw DimensionMismatch("phi acts on H (x) H");
  // f (x) g -> f (x) g_(1) (x) g_(2) -> f S(g_(1)) (x) g_(2)
  HTensor split = antipode_on_leg(coproduct_on_leg(u, 1), 1);
  HTensor out(u.nvars(), 2);
  for (const auto& [k, c] : split.terms()) out.add_term({k[0] + k[1], k[2]}, c);
  return out;
}

HTensor phi_inv(const HTensor& u) {
  if (u.arity() != 2) throw DimensionMismatch("phi_inv acts on H (x) H");
  HTensor split = coproduct_on_leg(u, 1);
  HTensor out(u.nvars(), 2);
  for (const auto& [k, c] : split.terms()) out.add_term({k[0] + k[1], k[2]}, c);
  return out;
}

// ---- DualPoly --------------------------------------------------------------

DualPoly DualPoly::monomial(const MultiIndex& lambda, const Rational& c) {
  DualPoly out(lambda.size());
  out.add_term(lambda, c);
  return out;
}

Rational DualPoly::coefficient(const MultiIndex& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DualPoly::add_term(const MultiIndex& lambda, const Rational& c) {
  require_same_n(n_, lambda.size(), "DualPoly::add_term");
  accumulate(terms_, lambda, c);
}

DualPoly& DualPoly::operator+=(const DualPoly& other) {
  require_same_n(n_, other.n_, "DualPoly +");
  for (const auto& [a, c] : other.terms_) accumulate(terms_, a, c);
  return *this;
}

DualPoly& DualPoly::operator-=(const DualPoly& other) {
  require_same_n(n_, other.n_, "DualPoly -");
  for (const auto& [a, c] : other.terms_) accumulate(terms_, a, Rational(-c));
  return *this;
}

DualPoly& DualPoly::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) terms_.clear();
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

HPoly DualPoly::as_poly() const {
  HPoly out(n_);
  for (const auto& [a, c] : terms_) out.add_term(a, c);
  return out;
}

Rational pairing(const DualPoly& x, const HPoly& f) {
  require_same_n(x.nvars(), f.nvars(), "pairing");
  Rational out(0);
  for (const auto& [lambda, c] : x.terms()) {
    Rational d = f.coefficient(lambda);
    if (!is_zero(d)) out += c * d * lambda.factorial();
  }
  return out;
}

DualPoly dual_mul(const DualPoly& x, const DualPoly& y) {
  require_same_n(x.nvars(), y.nvars(), "dual_mul");
  DualPoly out(x.nvars());
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) out.add_term(a + b, c * d);
  return out;
}

namespace {

DualPoly dual_action(const DualPoly& x, const HPoly& h, bool twisted) {
  require_same_n(x.nvars(), h.nvars(), "dual_h_action");
  // <t^l . T^e, T^m> = +-<t^l, T^{e+m}> = +- l! [l = e+m], hence
  // t^l . T^e = +-(l)_e t^{l-e}.
  DualPoly out(x.nvars());
  for (const auto& [lambda, c] : x.terms())
    for (const auto& [eta, d] : h.terms()) {
      auto rest = lambda.minus(eta);
      if (!rest) continue;
      Rational sign = twisted ? sign_of_degree(eta.degree()) : Rational(1);
      out.add_term(*rest, sign * c * d * lambda.falling_factorial(eta));
    }
  return out;
}

}  // namespace

DualPoly dual_h_action(const DualPoly& x, const HPoly& h) { return dual_action(x, h, true); }

DualPoly dual_h_action_untwisted(const DualPoly& x, const HPoly& h) { return dual_action(x, h, false); }

DualPoly to_dual(const HPoly& f) {
  DualPoly out(f.nvars());
  for (const auto& [a, c] : f.terms()) out.add_term(a, c);
  return out;
}

HPoly from_dual(const DualPoly& x) {
  HPoly out(x.nvars());
  for (const auto& [a, c] : x.terms()) out.add_term(a, c);
  return out;
}

}  // namespace tcalg
