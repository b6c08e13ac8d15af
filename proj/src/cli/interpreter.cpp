#include "tcalg/cli/interpreter.hpp"

#include <algorithm>
#include <optional>
#include <regex>

#include "tcalg/errors.hpp"

namespace tcalg::cli {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

template <class T>
constexpr bool is_dist = false;
template <class R>
constexpr bool is_dist<Dist<R>> = true;

bool has_position(const std::string& msg) {
  static const std::regex suffix(R"( at \d+:\d+$)");
  return std::regex_search(msg, suffix);
}

// Library errors carry no source position; attach the innermost node's.
[[noreturn]] void rethrow_located(const Error& ex, const Expr& at) {
  std::string msg = ex.what();
  if (has_position(msg)) throw;
  msg += " at " + std::to_string(at.line) + ":" + std::to_string(at.column);
  if (dynamic_cast<const DimensionMismatch*>(&ex)) throw DimensionMismatch(msg);
  if (dynamic_cast<const IndexOutOfRange*>(&ex)) throw IndexOutOfRange(msg);
  if (dynamic_cast<const InconsistentTable*>(&ex)) throw InconsistentTable(msg);
  if (dynamic_cast<const NotReconstructible*>(&ex)) throw NotReconstructible(msg);
  if (dynamic_cast<const SessionError*>(&ex)) throw SessionError(msg);
  if (dynamic_cast<const TypeMismatch*>(&ex)) throw TypeMismatch(msg);
  throw Error(msg);
}

[[noreturn]] void mismatch(const Expr& at, const std::string& what) {
  throw TypeMismatch(what + " at " + std::to_string(at.line) + ":" + std::to_string(at.column));
}

// ---- ring helpers for distribution coefficients ----------------------------

template <class R>
R ring_constant(const Session& s, const Rational& c);
template <>
Rational ring_constant<Rational>(const Session&, const Rational& c) {
  return c;
}
template <>
RatMatrix ring_constant<RatMatrix>(const Session& s, const Rational& c) {
  return RatMatrix::scalar(s.N, c);
}
template <>
WeylElement ring_constant<WeylElement>(const Session& s, const Rational& c) {
  return WeylElement::constant(s.n, c);
}
template <>
LaurentPoly ring_constant<LaurentPoly>(const Session&, const Rational& c) {
  return LaurentPoly::monomial(0, c);
}

template <class R>
Dist<R> dist_monomial(long j, long k, const R& c) {
  Dist<R> d;
  d.d.add_term(j, k, c);
  return d;
}

template <class R>
Dist<R> dist_add(const Dist<R>& a, const Dist<R>& b) {
  Dist<R> out = a;
  for (const auto& [jk, c] : b.d.coeffs()) out.d.add_term(jk.first, jk.second, c);
  return out;
}

template <class R>
Dist<R> dist_mul(const Dist<R>& a, const Dist<R>& b) {
  Dist<R> out;
  for (const auto& [x, c] : a.d.coeffs())
    for (const auto& [y, e] : b.d.coeffs()) out.d.add_term(x.first + y.first, x.second + y.second, R(c * e));
  return out;
}

template <class R>
bool z_only(const Dist<R>& a) {
  return std::all_of(a.d.coeffs().begin(), a.d.coeffs().end(), [](const auto& kv) { return kv.first.first == 0; });
}

template <class R>
FormalDistribution<R> as_z(const Dist<R>& a, const Expr& at) {
  if (!z_only(a)) mismatch(at, "expected a distribution in z alone");
  FormalDistribution<R> out;
  for (const auto& [jk, c] : a.d.coeffs()) out.add_term(jk.second, c);
  return out;
}

template <class R>
Dist<R> from_z(const FormalDistribution<R>& f) {
  Dist<R> out;
  for (const auto& [k, c] : f.coeffs()) out.d.add_term(0, k, c);
  return out;
}

// ---- promotion -------------------------------------------------------------

HTensor tensor_constant(std::size_t n, std::size_t arity, const Rational& c) {
  std::vector<HPoly> legs(arity, HPoly::constant(n, Rational(1)));
  return tensor(legs) * c;
}

// Converts v to the type of `like`, using like's dimensions.
std::optional<Value> lift(const Value& v, const Value& like, const Session& s) {
  if (v.index() == like.index()) return v;
  const Rational* r = std::get_if<Rational>(&v);
  return std::visit(
      overloaded{
          [&](const HPoly& h) -> std::optional<Value> {
            if (r) return HPoly::constant(h.nvars(), *r);
            return std::nullopt;
          },
          [&](const HTensor& t) -> std::optional<Value> {
            if (r) return tensor_constant(t.nvars(), t.arity(), *r);
            return std::nullopt;
          },
          [&](const DualPoly& d) -> std::optional<Value> {
            if (r) return DualPoly::monomial(MultiIndex::zero(d.nvars()), *r);
            return std::nullopt;
          },
          [&](const WeylElement& w) -> std::optional<Value> {
            if (r) return WeylElement::constant(w.nvars(), *r);
            return std::nullopt;
          },
          [&](const MatWeyl& m) -> std::optional<Value> {
            if (r) return MatWeyl::scalar(m.size(), WeylElement::constant(m.nvars(), *r));
            if (auto w = std::get_if<WeylElement>(&v); w && w->nvars() == m.nvars()) return MatWeyl::scalar(m.size(), *w);
            if (auto M = std::get_if<RatMatrix>(&v); M && M->size() == m.size()) return MatWeyl::from_matrix(m.nvars(), *M);
            return std::nullopt;
          },
          [&](const RatMatrix& m) -> std::optional<Value> {
            if (r) return RatMatrix::scalar(m.size(), *r);
            return std::nullopt;
          },
          [&](const LaurentPoly&) -> std::optional<Value> {
            if (r) return LaurentPoly::monomial(0, *r);
            return std::nullopt;
          },
          [&]<class R>(const Dist<R>&) -> std::optional<Value> {
            if (r) return dist_monomial<R>(0, 0, ring_constant<R>(s, *r));
            if (auto c = std::get_if<R>(&v)) return dist_monomial<R>(0, 0, *c);
            return std::nullopt;
          },
          [&](const DifferentialForm& f) -> std::optional<Value> {
            if (f.degree() != 0) return std::nullopt;
            if (r) return DifferentialForm::monomial(HPoly::constant(f.nvars(), *r), {}, f.nvars());
            if (auto h = std::get_if<HPoly>(&v)) return DifferentialForm::monomial(*h, {}, h->nvars());
            return std::nullopt;
          },
          [&](const auto&) -> std::optional<Value> { return std::nullopt; },
      },
      like);
}

std::pair<Value, Value> unify(const Value& a, const Value& b, const Session& s, const Expr& at, const char* op) {
  if (a.index() == b.index()) return {a, b};
  if (auto x = lift(a, b, s)) return {*x, b};
  if (auto y = lift(b, a, s)) return {a, *y};
  // A scalar Weyl element meets a constant matrix inside M_N(A_n).
  const WeylElement* w = std::get_if<WeylElement>(&a);
  const RatMatrix* m = std::get_if<RatMatrix>(&b);
  if (!w) {
    w = std::get_if<WeylElement>(&b);
    m = std::get_if<RatMatrix>(&a);
  }
  if (w && m) {
    Value like = MatWeyl(w->nvars(), m->size());
    return {*lift(a, like, s), *lift(b, like, s)};
  }
  mismatch(at, std::string("cannot ") + op + " " + type_name(a) + " and " + type_name(b));
}

// ---- arithmetic ------------------------------------------------------------

Value scale(const Value& v, const Rational& c) {
  return std::visit(
      overloaded{
          [&](const Rational& x) -> Value { return Rational(x * c); },
          [&](const CurValue& x) -> Value { return CurValue{x.backend, x.value * c}; },
          [&]<class R>(const Dist<R>& x) -> Value {
            Dist<R> out;
            for (const auto& [jk, e] : x.d.coeffs()) out.d.add_term(jk.first, jk.second, R(e * c));
            return out;
          },
          [&](const OperadWords& x) -> Value {
            OperadWords out;
            if (tcalg::is_zero(c)) return out;
            for (const auto& [w, e] : x.terms) out.terms[w] = e * c;
            return out;
          },
          [&](const DifferentialForm& x) -> Value {
            DifferentialForm out(x.nvars(), x.degree());
            for (const auto& [I, f] : x.terms()) out.add_term(I, f * c);
            return out;
          },
          [&](const auto& x) -> Value { return x * c; },
      },
      v);
}

Value add(const Value& a, const Value& b, const Session& s, const Expr& at) {
  auto [x, y] = unify(a, b, s, at, "add");
  return std::visit(
      [&]<class T>(const T& u) -> Value {
        const T& v = std::get<T>(y);
        if constexpr (is_dist<T>) {
          return dist_add(u, v);
        } else if constexpr (std::is_same_v<T, OperadWords>) {
          OperadWords out = u;
          for (const auto& [w, c] : v.terms) {
            Rational sum = out.terms[w] + c;
            if (tcalg::is_zero(sum))
              out.terms.erase(w);
            else
              out.terms[w] = sum;
          }
          return out;
        } else if constexpr (std::is_same_v<T, CurValue>) {
          if (!(u.backend == v.backend)) mismatch(at, "values of different backends");
          return CurValue{u.backend, u.value + v.value};
        } else if constexpr (std::is_same_v<T, Rational>) {
          return Rational(u + v);
        } else {
          return u + v;
        }
      },
      x);
}

Value negate(const Value& v) { return scale(v, Rational(-1)); }

Value mul(const Value& a, const Value& b, const Session& s, const Expr& at) {
  if (auto c = std::get_if<Rational>(&a)) return scale(b, *c);
  if (auto c = std::get_if<Rational>(&b)) return scale(a, *c);
  const HPoly* h = std::get_if<HPoly>(&a);
  const Value* other = &b;
  if (!h) {
    h = std::get_if<HPoly>(&b);
    other = &a;
  }
  if (h) {
    if (auto D = std::get_if<PolyDerivation>(other)) {
      PolyDerivation out(D->nvars());
      for (std::size_t i = 0; i < D->nvars(); ++i) out[i] = *h * (*D)[i];
      return out;
    }
    if (auto f = std::get_if<DifferentialForm>(other)) {
      DifferentialForm out(f->nvars(), f->degree());
      for (const auto& [I, g] : f->terms()) out.add_term(I, *h * g);
      return out;
    }
  }
  auto [x, y] = unify(a, b, s, at, "multiply");
  return std::visit(
      [&]<class T>(const T& u) -> Value {
        const T& v = std::get<T>(y);
        if constexpr (is_dist<T>) {
          return dist_mul(u, v);
        } else if constexpr (std::is_same_v<T, OperadWords>) {
          OperadWords out;
          for (const auto& [w1, c1] : u.terms)
            for (const auto& [w2, c2] : v.terms) {
              OperadElt::Word w{0};
              w.insert(w.end(), w1.begin(), w1.end());
              w.insert(w.end(), w2.begin(), w2.end());
              out.terms[w] += c1 * c2;
            }
          std::erase_if(out.terms, [](const auto& kv) { return tcalg::is_zero(kv.second); });
          return out;
        } else if constexpr (std::is_same_v<T, DualPoly>) {
          return dual_mul(u, v);
        } else if constexpr (std::is_same_v<T, HPoly> || std::is_same_v<T, HTensor> || std::is_same_v<T, WeylElement> ||
                             std::is_same_v<T, MatWeyl> || std::is_same_v<T, RatMatrix> ||
                             std::is_same_v<T, LaurentPoly>) {
          return u * v;
        } else {
          mismatch(at, "cannot multiply " + type_name(x) + " and " + type_name(y));
        }
      },
      x);
}

Value one_like(const Value& v, const Session& s, const Expr& at) {
  if (std::holds_alternative<Rational>(v)) return Rational(1);
  if (auto o = lift(Rational(1), v, s)) return *o;
  mismatch(at, type_name(v) + " has no unit for a zeroth power");
}

Value power(const Value& base, long e, const Session& s, const Expr& at) {
  if (e >= 0) {
    Value out = one_like(base, s, at);
    for (long i = 0; i < e; ++i) out = mul(out, base, s, at);
    return out;
  }
  if (auto r = std::get_if<Rational>(&base)) {
    if (tcalg::is_zero(*r)) throw DimensionMismatch("negative power of zero");
    Rational inv = Rational(1) / *r, out(1);
    for (long i = 0; i < -e; ++i) out *= inv;
    return out;
  }
  if (auto l = std::get_if<LaurentPoly>(&base)) {
    if (l->terms().size() == 1 && l->terms().begin()->second == 1) return LaurentPoly::monomial(l->terms().begin()->first * e);
    mismatch(at, "negative powers need a monomial with coefficient 1");
  }
  return std::visit(
      [&]<class T>(const T& d) -> Value {
        if constexpr (is_dist<T>) {
          if (d.d.coeffs().size() == 1) {
            const auto& [jk, c] = *d.d.coeffs().begin();
            using R = std::decay_t<decltype(c)>;
            if (c == ring_constant<R>(s, Rational(1))) return dist_monomial<R>(jk.first * e, jk.second * e, c);
          }
          mismatch(at, "negative powers need a monomial with coefficient 1");
        } else {
          mismatch(at, "negative power of " + type_name(base));
        }
      },
      base);
}

DifferentialForm as_form(const Value& v, const Session& s, const Expr& at) {
  if (auto f = std::get_if<DifferentialForm>(&v)) return *f;
  if (auto h = std::get_if<HPoly>(&v)) return DifferentialForm::monomial(*h, {}, h->nvars());
  if (auto r = std::get_if<Rational>(&v)) return DifferentialForm::monomial(HPoly::constant(s.n, *r), {}, s.n);
  mismatch(at, "expected a differential form, got " + type_name(v));
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("forms in different variable counts");
  DifferentialForm out(a.nvars(), a.degree() + b.degree());
  for (const auto& [I, f] : a.terms())
    for (const auto& [J, g] : b.terms()) {
      DifferentialForm::Indices K = I;
      K.insert(K.end(), J.begin(), J.end());
      out.add_term(K, f * g);
    }
  return out;
}

HTensor as_tensor(const Value& v, const Session& s, const Expr& at) {
  if (auto t = std::get_if<HTensor>(&v)) return *t;
  if (auto h = std::get_if<HPoly>(&v)) return tensor({*h});
  if (auto r = std::get_if<Rational>(&v)) return tensor({HPoly::constant(s.n, *r)});
  mismatch(at, "expected a polynomial tensor, got " + type_name(v));
}

HTensor tensor_concat(const HTensor& a, const HTensor& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("tensor legs in different variable counts");
  HTensor out(a.nvars(), a.arity() + b.arity());
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) {
      HTensor::Key k = k1;
      k.insert(k.end(), k2.begin(), k2.end());
      out.add_term(k, c1 * c2);
    }
  return out;
}

// ---- argument extraction ---------------------------------------------------

HPoly want_hpoly(const Value& v, const Session& s, const Expr& at) {
  if (auto h = std::get_if<HPoly>(&v)) return *h;
  if (auto r = std::get_if<Rational>(&v)) return HPoly::constant(s.n, *r);
  mismatch(at, "expected a polynomial in T, got " + type_name(v));
}

const ConformalElement& want_conformal(const Value& v, const Expr& at) {
  if (auto c = std::get_if<ConformalElement>(&v)) return *c;
  mismatch(at, "expected a conformal element, got " + type_name(v));
}

unsigned want_nat(const Value& v, const Expr& at) {
  auto r = std::get_if<Rational>(&v);
  if (!r || r->get_den() != 1 || sgn(*r) < 0 || !r->get_num().fits_uint_p())
    mismatch(at, "expected a non-negative integer");
  return static_cast<unsigned>(r->get_num().get_ui());
}

const PolyDerivation& want_derivation(const Value& v, const Expr& at) {
  if (auto d = std::get_if<PolyDerivation>(&v)) return *d;
  mismatch(at, "expected a derivation, got " + type_name(v));
}

OperadElt want_operad(const Value& v, const Session& s, const Expr& at) {
  if (auto w = std::get_if<OperadWords>(&v)) return to_operad(*w, s.variety);
  mismatch(at, "expected an operad element, got " + type_name(v));
}

// q-free Weyl element as a polynomial in p.
HPoly p_polynomial(const WeylElement& w, const Expr& at) {
  for (const auto& [k, c] : w.terms())
    if (!k.q.is_zero()) mismatch(at, "the argument of a[...] must not contain q");
  return q_free_part(w);
}

ConformalElement build_conformal(const Value& v, const Session& s, const Expr& at) {
  Backend b = s.conformal_backend();
  if (auto r = std::get_if<Rational>(&v)) return ConformalElement::basic(b, MultiIndex::zero(b.n), RatMatrix::scalar(b.N, *r));
  if (auto m = std::get_if<RatMatrix>(&v)) return ConformalElement::basic(b, MultiIndex::zero(b.n), *m);
  if (auto w = std::get_if<WeylElement>(&v)) {
    if (w->nvars() != b.n) throw DimensionMismatch("variable count does not match the session");
    return ConformalElement::basic(b, PolyMatrix::diagonal(std::vector<HPoly>(b.N, p_polynomial(*w, at))));
  }
  if (auto m = std::get_if<MatWeyl>(&v)) {
    PolyMatrix P(m->nvars(), m->size());
    for (std::size_t i = 0; i < m->size(); ++i)
      for (std::size_t j = 0; j < m->size(); ++j) P(i, j) = p_polynomial((*m)(i, j), at);
    return ConformalElement::basic(b, P);
  }
  mismatch(at, "a[...] takes a rational, a matrix or a polynomial in p, got " + type_name(v));
}

class Evaluator {
 public:
  explicit Evaluator(const Session& s) : s_(s) {}

  Value eval(const Expr& e) {
    try {
      return eval_node(e);
    } catch (const Error& ex) {
      rethrow_located(ex, e);
    }
  }

 private:
  Value eval_node(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::Number: return parse_rational(e.text);
      case K::Symbol: return symbol(e);
      case K::Neg: return negate(eval(e.args[0]));
      case K::Add: return add(eval(e.args[0]), eval(e.args[1]), s_, e);
      case K::Sub: return add(eval(e.args[0]), negate(eval(e.args[1])), s_, e);
      case K::Mul:
      case K::Juxt: return mul(eval(e.args[0]), eval(e.args[1]), s_, e);
      case K::Dot: {
        Value h = eval(e.args[0]), c = eval(e.args[1]);
        return haction(want_hpoly(h, s_, e.args[0]), want_conformal(c, e.args[1]));
      }
      case K::Tensor:
        return tensor_concat(as_tensor(eval(e.args[0]), s_, e.args[0]), as_tensor(eval(e.args[1]), s_, e.args[1]));
      case K::Pow: return power(eval(e.args[0]), std::stol(e.text), s_, e);
      case K::Wedge: return wedge(as_form(eval(e.args[0]), s_, e.args[0]), as_form(eval(e.args[1]), s_, e.args[1]));
      case K::Conformal: return build_conformal(eval(e.args[0]), s_, e.args[0]);
      case K::List: return list(e);
      case K::Poisson: {
        HPoly f = want_hpoly(eval(e.args[0]), s_, e.args[0]), g = want_hpoly(eval(e.args[1]), s_, e.args[1]);
        return poisson(f, g, f.nvars() / 2 + f.nvars() % 2);
      }
      case K::Call: return call(e);
    }
    mismatch(e, "unsupported expression");
  }

  Value symbol(const Expr& e) {
    const std::string& id = e.text;
    std::size_t n = s_.n;
    auto index = [&](std::size_t prefix) { return std::stoul(id.substr(prefix)) - 1; };
    if (id == "z" || id == "w") {
      long j = id == "w", k = id == "z";
      if (s_.ring == "rational") return dist_monomial(j, k, Rational(1));
      if (s_.ring == "matrix") return dist_monomial(j, k, RatMatrix::identity(s_.N));
      if (s_.ring == "weyl") return dist_monomial(j, k, WeylElement::constant(n, Rational(1)));
      if (s_.ring == "laurent") return dist_monomial(j, k, LaurentPoly::monomial(0));
      throw std::invalid_argument("unknown ring " + s_.ring);
    }
    if (id == "t") return LaurentPoly::monomial(1);
    if (id.rfind("dT", 0) == 0) {
      std::uint32_t i = static_cast<std::uint32_t>(index(2));
      return DifferentialForm::monomial(HPoly::constant(n, Rational(1)), {i}, n);
    }
    switch (id[0]) {
      case 'T': return HPoly::variable(n, index(1));
      case 't': return DualPoly::monomial(MultiIndex::unit(n, index(1)));
      case 'p': return WeylElement::p(n, index(1));
      case 'q': return WeylElement::q(n, index(1));
      case 'd': return PolyDerivation::basic(HPoly::constant(n, Rational(1)), index(1));
      case 'x': {
        OperadWords w;
        w.terms[{static_cast<int>(index(1) + 1)}] = Rational(1);
        return w;
      }
    }
    mismatch(e, "unknown identifier '" + id + "'");
  }

  Value list(const Expr& e) {
    std::size_t L = e.args.size();
    bool matrix = std::all_of(e.args.begin(), e.args.end(),
                              [&](const Expr& row) { return row.kind == Expr::Kind::List && row.args.size() == L; });
    if (matrix) {
      std::vector<Value> entries;
      bool all_rational = true, any_h = false, any_weyl = false;
      for (const auto& row : e.args)
        for (const auto& x : row.args) {
          entries.push_back(eval(x));
          const Value& v = entries.back();
          all_rational &= std::holds_alternative<Rational>(v);
          any_h |= std::holds_alternative<HPoly>(v);
          any_weyl |= std::holds_alternative<WeylElement>(v);
          if (!std::holds_alternative<Rational>(v) && !std::holds_alternative<HPoly>(v) &&
              !std::holds_alternative<WeylElement>(v))
            mismatch(x, "matrix entries must be rationals, polynomials in T or Weyl elements");
        }
      if (all_rational) {
        RatMatrix M(L);
        for (std::size_t k = 0; k < entries.size(); ++k) M(k / L, k % L) = std::get<Rational>(entries[k]);
        return M;
      }
      if (any_h && any_weyl) mismatch(e, "matrix mixes T with p, q");
      MatWeyl M(s_.n, L);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const Value& v = entries[k];
        WeylElement w = std::holds_alternative<Rational>(v) ? WeylElement::constant(s_.n, std::get<Rational>(v))
                        : any_h ? WeylElement::from_q_poly(std::get<HPoly>(v))
                                : std::get<WeylElement>(v);
        M(k / L, k % L) = w;
      }
      if (any_h) return CurValue{Backend{BackendKind::CurPoly, s_.n, L}, M};
      return M;
    }
    if (L != 2) mismatch(e, "a bracket takes two entries; a matrix needs square rows");
    Value x = eval(e.args[0]), y = eval(e.args[1]);
    if (std::holds_alternative<PolyDerivation>(x) && std::holds_alternative<PolyDerivation>(y))
      return der_bracket(std::get<PolyDerivation>(x), std::get<PolyDerivation>(y));
    return add(mul(x, y, s_, e), negate(mul(y, x, s_, e)), s_, e);
  }

  Value call(const Expr& e) {
    const std::string& f = e.text;
    std::vector<Value> a;
    for (const auto& x : e.args) a.push_back(eval(x));
    const auto& at = e.args;
    if (f == "fprod") return fproduct(want_conformal(a[0], at[0]), want_conformal(a[1], at[1]), want_hpoly(a[2], s_, at[2]));
    if (f == "xprod") {
      DualPoly x;
      if (auto d = std::get_if<DualPoly>(&a[2]))
        x = *d;
      else if (auto r = std::get_if<Rational>(&a[2]))
        x = DualPoly::monomial(MultiIndex::zero(s_.n), *r);
      else
        mismatch(at[2], "expected an element t^l of the dual, got " + type_name(a[2]));
      return xproduct(want_conformal(a[0], at[0]), want_conformal(a[1], at[1]), x);
    }
    if (f == "nprod") return nproduct(want_conformal(a[0], at[0]), want_conformal(a[1], at[1]), want_nat(a[2], at[2]));
    if (f == "res") {
      auto [x, y] = unify(a[0], a[1], s_, e, "take the residue product of");
      unsigned k = want_nat(a[2], at[2]);
      return std::visit(
          [&]<class T>(const T& u) -> Value {
            if constexpr (is_dist<T>) {
              return from_z(nproduct_res(as_z(u, at[0]), as_z(std::get<T>(y), at[1]), k));
            } else {
              mismatch(e, "res takes two distributions, got " + type_name(x));
            }
          },
          x);
    }
    if (f == "dz")
      return std::visit(
          [&]<class T>(const T& u) -> Value {
            if constexpr (is_dist<T>) {
              return from_z(derivative_z(as_z(u, at[0])));
            } else {
              mismatch(at[0], "dz takes a distribution, got " + type_name(a[0]));
            }
          },
          a[0]);
    if (f == "eval") {
      const ConformalElement& c = want_conformal(a[0], at[0]);
      MatWeyl v = tcalg::eval(c, want_hpoly(a[1], s_, at[1]));
      if (c.backend().kind == BackendKind::CurPoly) return CurValue{c.backend(), v};
      return v;
    }
    if (f == "S") return antipode(want_hpoly(a[0], s_, at[0]));
    if (f == "Delta") return coproduct(want_hpoly(a[0], s_, at[0]));
    if (f == "eps") return counit(want_hpoly(a[0], s_, at[0]));
    if (f == "sigma" || f == "skew" || f == "sym") {
      if (auto m = std::get_if<MatWeyl>(&a[0])) {
        if (f == "sigma") return involution_sigma(*m);
        return f == "skew" ? skew_part(*m) : sym_part(*m);
      }
      if (auto w = std::get_if<WeylElement>(&a[0])) {
        if (f == "sigma") return involution_sigma(*w);
        WeylElement sw = involution_sigma(*w);
        return (f == "skew" ? *w - sw : *w + sw) * Rational(1, 2);
      }
      mismatch(at[0], f + " takes a Weyl element or matrix, got " + type_name(a[0]));
    }
    if (f == "div") return divergence(want_derivation(a[0], at[0]));
    if (f == "ham") {
      HPoly h = want_hpoly(a[0], s_, at[0]);
      return hamiltonian_field(h, h.nvars() / 2 + h.nvars() % 2);
    }
    if (f == "apply") return der_apply(want_derivation(a[0], at[0]), want_hpoly(a[1], s_, at[1]));
    if (f == "ext_d") return exterior_d(as_form(a[0], s_, at[0]));
    if (f == "contract") return contract_symplectic(want_derivation(a[0], at[0]));
    if (f == "compose") {
      OperadElt outer = want_operad(a[0], s_, at[0]);
      std::vector<OperadElt> gs;
      std::vector<std::uint32_t> parts;
      for (std::size_t i = 1; i < a.size(); ++i) {
        gs.push_back(want_operad(a[i], s_, at[i]));
        parts.push_back(static_cast<std::uint32_t>(gs.back().arity()));
      }
      if (outer.arity() != gs.size())
        mismatch(e, "compose: the outer element has arity " + std::to_string(outer.arity()) + " but " +
                        std::to_string(gs.size()) + " inner elements were given");
      return from_operad(tree_compose(outer, Partition(parts), gs));
    }
    mismatch(e, "unknown function " + f);
  }

  const Session& s_;
};

std::string dist_text(const auto& d) {
  using R = std::decay_t<decltype(d.d.coeffs().begin()->second)>;
  const auto& cs = d.d.coeffs();
  bool z = std::all_of(cs.begin(), cs.end(), [](const auto& kv) { return kv.first.first == 0; });
  bool w = std::all_of(cs.begin(), cs.end(), [](const auto& kv) { return kv.first.second == 0; });
  if (cs.empty()) return "0";
  if (z || w) {
    FormalDistribution<R> f;
    for (const auto& [jk, c] : cs) f.add_term(z ? jk.second : jk.first, c);
    return f.to_string(z ? "z" : "w");
  }
  return d.d.to_string();
}

}  // namespace

std::string type_name(const Value& v) {
  static const char* names[] = {"rational", "hpoly",     "tensor",       "dual",         "weyl",
                                "weyl-matrix", "matrix", "laurent",      "conformal",    "cur-value",
                                "distribution", "distribution", "distribution", "distribution", "operad",
                                "derivation",   "form"};
  return names[v.index()];
}

OperadElt to_operad(const OperadWords& w, Variety v) {
  int arity = 0;
  for (const auto& [word, c] : w.terms)
    for (int s : word) arity = std::max(arity, s);
  OperadElt out(v, static_cast<std::size_t>(arity));
  for (const auto& [word, c] : w.terms) out.add_term(word, c);
  return out;
}

OperadWords from_operad(const OperadElt& f) {
  OperadWords out;
  for (const auto& [w, c] : f.terms()) out.terms[w] = c;
  return out;
}

DistLocality distribution_locality(const Value& a, const Value& b) {
  return std::visit(
      [&](const auto& x) -> DistLocality {
        using T = std::decay_t<decltype(x)>;
        if constexpr (is_dist<T>) {
          const T* y = std::get_if<T>(&b);
          if (!y) throw TypeMismatch("locality needs two distributions over the same ring");
          if (!z_only(x) || !z_only(*y)) throw TypeMismatch("locality needs distributions in z alone");
          FormalDistribution<std::decay_t<decltype(x.d.coeffs().begin()->second)>> f, g;
          for (const auto& [jk, c] : x.d.coeffs()) f.add_term(jk.second, c);
          for (const auto& [jk, c] : y->d.coeffs()) g.add_term(jk.second, c);
          auto r = locality_test(f, g);
          if (r.local) return {true, ""};
          T top;
          top.d.add_term(r.position->first, r.position->second, *r.coefficient);
          return {false, "a(w) b(z) has the term " + top.d.to_string()};
        } else {
          throw TypeMismatch("locality needs two conformal elements or two distributions");
        }
      },
      a);
}

Value evaluate(const Expr& e, const Session& s) { return Evaluator(s).eval(e); }

Value evaluate(const std::string& source, const Session& s) { return evaluate(parse(source, s), s); }

std::string format_value(const Value& v, const Session& s) {
  return std::visit(
      overloaded{
          [](const Rational& r) { return to_string(r); },
          [](const CurValue& c) { return tcalg::format_value(c.backend, c.value); },
          [&](const OperadWords& w) { return to_operad(w, s.variety).to_string(); },
          [](const PolyDerivation& d) { return d.to_string(); },
          [](const DifferentialForm& f) { return f.to_string(); },
          [](const ConformalElement& c) { return c.to_string(); },
          [](const LaurentPoly& l) { return l.to_string(); },
          [](const RatMatrix& m) { return m.to_string(); },
          [](const MatWeyl& m) { return m.to_string(); },
          [](const WeylElement& w) { return w.to_string(); },
          [](const DualPoly& d) { return d.to_string(); },
          [](const HTensor& t) { return t.to_string(); },
          [](const HPoly& h) { return h.to_string(); },
          [](const auto& d) { return dist_text(d); },
      },
      v);
}

}  // namespace tcalg::cli
