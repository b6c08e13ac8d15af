#include "tcalg/cli/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tcalg/errors.hpp"
#include "tcalg/fdist.hpp"
#include "tcalg/hopf.hpp"
#include "tcalg/sampling.hpp"
#include "tcalg/structures.hpp"
#include "tcalg/weyl.hpp"

namespace tcalg::cli {

namespace sm = tcalg::sampling;

void Tally::add(const CheckResult& r) { add(r.identity, r.passed, r.certificate); }

void Tally::add(const std::string& identity, bool passed, const std::string& certificate) {
  auto it = std::find_if(out_.begin(), out_.end(), [&](const CheckSummary& s) { return s.identity == identity; });
  if (it == out_.end()) {
    out_.push_back({identity, true, 0, ""});
    it = out_.end() - 1;
  }
  ++it->cases;
  if (!passed && it->passed) {
    it->passed = false;
    it->certificate = certificate;
  }
}

bool all_passed(const std::vector<CheckSummary>& s) {
  return std::all_of(s.begin(), s.end(), [](const CheckSummary& c) { return c.passed; });
}

namespace {

std::uint64_t bound_or(const SuiteOptions& o, std::uint64_t d) { return o.degree_bound.value_or(d); }
std::size_t samples_or(const SuiteOptions& o, std::size_t d) { return o.samples.value_or(d); }

std::string idx(const MultiIndex& a) { return monomial_string(a, "T").empty() ? "1" : monomial_string(a, "T"); }

// ---- hopf ------------------------------------------------------------------

std::vector<CheckSummary> hopf_suite(const SuiteOptions& o) {
  std::size_t n = o.n;
  std::uint64_t d = bound_or(o, 5);
  Tally t;
  auto basis = monomials_up_to(n, d);
  for (const auto& alpha : basis) {
    HPoly f = HPoly::monomial(alpha);
    HTensor D = coproduct(f);
    std::string at = "at " + idx(alpha);
    t.add("(Delta (x) id) Delta = (id (x) Delta) Delta", coproduct_on_leg(D, 0) == coproduct_on_leg(D, 1), at);
    t.add("tau Delta = Delta", permute_legs(D, {1, 0}) == D, at);
    t.add("(eps (x) id) Delta = id = (id (x) eps) Delta",
          as_poly(counit_on_leg(D, 0)) == f && as_poly(counit_on_leg(D, 1)) == f, at);
    HPoly e = HPoly::constant(n, counit(f));
    t.add("S(f_(1)) f_(2) = eps(f) = f_(1) S(f_(2))",
          multiply_legs(antipode_on_leg(D, 0)) == e && multiply_legs(antipode_on_leg(D, 1)) == e, at);
    if (alpha.degree() < d)
      for (std::size_t i = 0; i < n; ++i) {
        HPoly Ti = HPoly::variable(n, i);
        t.add("Delta(f T_i) = Delta(f) Delta(T_i)", coproduct(f * Ti) == D * coproduct(Ti),
              at + ", i = " + std::to_string(i + 1));
      }
  }
  std::vector<HTensor> deltas;
  for (const auto& nu : basis) deltas.push_back(coproduct(HPoly::monomial(nu)));
  for (const auto& lm : monomials_up_to(2 * n, d)) {
    MultiIndex l(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
      l[i] = lm[i];
      m[i] = lm[n + i];
    }
    DualPoly x = DualPoly::monomial(l), y = DualPoly::monomial(m), xy = dual_mul(x, y);
    bool ok = true;
    std::string cert;
    for (std::size_t v = 0; v < basis.size() && ok; ++v) {
      Rational rhs(0);
      for (const auto& [k, c] : deltas[v].terms())
        rhs += c * pairing(x, HPoly::monomial(k[0])) * pairing(y, HPoly::monomial(k[1]));
      if (pairing(xy, HPoly::monomial(basis[v])) != rhs) {
        ok = false;
        cert = "x = " + x.to_string() + ", y = " + y.to_string() + ", f = " + idx(basis[v]);
      }
    }
    t.add("<x y, f> = <x, f_(1)> <y, f_(2)>", ok, cert);
  }
  for (const auto& l : monomials_up_to(n, std::min<std::uint64_t>(d, 3)))
    for (const auto& e : monomials_up_to(n, 2)) {
      HPoly h = HPoly::monomial(e) + HPoly::constant(n, Rational(1, 2));
      DualPoly xh = dual_h_action(DualPoly::monomial(l), h);
      bool ok = true;
      std::string cert;
      for (const auto& m : basis) {
        HPoly f = HPoly::monomial(m);
        if (pairing(xh, f) != pairing(DualPoly::monomial(l), antipode(h) * f)) {
          ok = false;
          cert = "x = " + DualPoly::monomial(l).to_string() + ", h = " + h.to_string() + ", f = " + f.to_string();
          break;
        }
      }
      t.add("<x.h, f> = <x, S(h) f>", ok, cert);
    }
  std::uint64_t dphi = std::min<std::uint64_t>(d, 4);
  for (const auto& ab : monomials_up_to(2 * n, dphi)) {
    MultiIndex a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = ab[i];
      b[i] = ab[n + i];
    }
    HTensor u = tensor({HPoly::monomial(a), HPoly::monomial(b)});
    t.add("Phi Phi^-1 = id = Phi^-1 Phi", phi(phi_inv(u)) == u && phi_inv(phi(u)) == u, "at " + u.to_string());
  }
  return t.summaries();
}

// ---- weyl ------------------------------------------------------------------

std::vector<MatWeyl> weyl_monomials(std::size_t n, std::size_t N, std::uint64_t d) {
  std::vector<MatWeyl> out;
  for (const auto& k : monomials_up_to(2 * n, d)) {
    MultiIndex p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = k[i];
      q[i] = k[n + i];
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.push_back(MatWeyl::unit(N, i, j, WeylElement::monomial(p, q)));
  }
  return out;
}

std::vector<CheckSummary> weyl_suite(const SuiteOptions& o) {
  std::size_t n = o.n, N = o.N;
  std::uint64_t d = bound_or(o, 3);
  auto basis = weyl_monomials(n, N, d);
  std::vector<HVector> vectors;
  for (const auto& alpha : monomials_up_to(n, 2 * d))
    for (std::size_t j = 0; j < N; ++j) vectors.push_back(basis_vector(N, alpha, j));
  std::vector<std::vector<HVector>> images(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (const auto& v : vectors) images[b].push_back(rep_apply(basis[b], v));
  Tally t;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      MatWeyl ab = basis[a] * basis[b];
      bool ok = true;
      std::string cert;
      for (std::size_t v = 0; v < vectors.size() && ok; ++v)
        if (rep_apply(ab, vectors[v]) != rep_apply(basis[a], images[b][v])) {
          ok = false;
          cert = "a = " + basis[a].to_string() + ", b = " + basis[b].to_string() + ", basis vector #" +
                 std::to_string(v + 1);
        }
      t.add("(a b) v = a (b v)", ok, cert);
    }
  return t.summaries();
}

// ---- conformal -------------------------------------------------------------

Backend backend_of(const SuiteOptions& o) { return Backend{o.backend, o.n, o.N}; }

std::vector<CheckSummary> eval_suite(const SuiteOptions& o) {
  Backend b = backend_of(o);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(o.seed));
  Tally t;
  for (std::size_t s = 0; s < samples_or(o, 200); ++s) {
    ConformalElement a = sm::random_conformal(rng, b, 3, 2), c = sm::random_conformal(rng, b, 3, 2);
    HPoly f = sm::random_poly(rng, b.n, 2, 3), g = sm::random_poly(rng, b.n, 2, 3);
    t.add(check_evaluation_identity(a, c, f, g));
  }
  return t.summaries();
}

// T^gamma a[p^beta E_ij] for |gamma| <= dg, |beta| <= db.
std::vector<ConformalElement> basic_elements(const Backend& b, std::uint64_t dg, std::uint64_t db) {
  std::vector<ConformalElement> out;
  auto betas = b.kind == BackendKind::CurPoly ? std::vector<MultiIndex>{MultiIndex::zero(b.n)} : monomials_up_to(b.n, db);
  for (const auto& gamma : monomials_up_to(b.n, dg))
    for (const auto& beta : betas)
      for (std::size_t i = 0; i < b.N; ++i)
        for (std::size_t j = 0; j < b.N; ++j) {
          ConformalElement c(b);
          c.add_term(gamma, beta, RatMatrix::unit(b.N, i, j));
          out.push_back(c);
        }
  return out;
}

void require_one_variable(const SuiteOptions& o, const char* suite) {
  if (o.n != 1) throw std::invalid_argument(std::string("suite ") + suite + " uses n-products and needs --n 1");
}

std::vector<CheckSummary> C_suite(const SuiteOptions& o) {
  require_one_variable(o, "C");
  Backend b = backend_of(o);
  auto basis = basic_elements(b, bound_or(o, 2), 2);
  Tally t;
  for (const auto& a : basis)
    for (const auto& c : basis) {
      auto top = static_cast<unsigned>(locality_bound(a, c)) + 1;
      for (unsigned k = 0; k <= top; ++k) {
        t.add(check_C2(a, c, k));
        t.add(check_C3(a, c, k));
      }
    }
  return t.summaries();
}

std::vector<CheckSummary> H_suite(const SuiteOptions& o) {
  Backend b = backend_of(o);
  auto basis = basic_elements(b, bound_or(o, 2), 2);
  std::size_t n = b.n;
  std::vector<HPoly> hs;
  for (std::size_t i = 0; i < n; ++i) hs.push_back(HPoly::variable(n, i));
  HPoly mixed = HPoly::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) mixed += pow(HPoly::variable(n, i), 2);
  hs.push_back(mixed);
  auto lambdas = monomials_up_to(n, 2);
  HPoly f2 = HPoly::constant(n, Rational(1)) + HPoly::variable(n, 0);
  Tally t;
  for (std::size_t ia = 0; ia < basis.size(); ++ia)
    for (std::size_t ib = 0; ib < basis.size(); ++ib) {
      const auto& a = basis[ia];
      const auto& c = basis[ib];
      HPoly f = HPoly::monomial(lambdas[(ia + ib) % lambdas.size()]);
      t.add_all(check_H0(a, basis[(ia + 1) % basis.size()], c, basis[(ib + 1) % basis.size()], f, f2, Rational(2),
                         Rational(-1, 3)));
      for (const auto& h : hs)
        for (const auto& l : lambdas) t.add_all(check_H2(a, c, h, l));
    }
  return t.summaries();
}

std::vector<CheckSummary> locality_suite(const SuiteOptions& o) {
  Backend b = backend_of(o);
  auto basis = basic_elements(b, bound_or(o, 2), 2);
  Tally t;
  for (const auto& a : basis)
    for (const auto& c : basis) {
      std::uint64_t bound = locality_bound(a, c);
      auto set = locality_set(a, c);
      bool within = std::all_of(set.begin(), set.end(), [&](const MultiIndex& l) { return l.degree() <= bound; });
      t.add("locality set within the degree bound", within, "a = " + a.to_string() + ", b = " + c.to_string());
      bool beyond = true;
      std::string cert;
      for (const auto& l : monomials_up_to(b.n, bound + 1)) {
        if (l.degree() != bound + 1) continue;
        if (!xproduct(a, c, DualPoly::monomial(l)).is_zero()) {
          beyond = false;
          cert = "a = " + a.to_string() + ", b = " + c.to_string() + ", x = " + DualPoly::monomial(l).to_string();
          break;
        }
      }
      t.add("a_(x) b = 0 one degree past the bound", beyond, cert);
    }
  // Current algebra table.
  Backend cur{BackendKind::CurPoly, o.n, o.N};
  auto unit = [&](std::size_t i, std::size_t j) { return ConformalElement::basic(cur, MultiIndex::zero(o.n), RatMatrix::unit(o.N, i, j)); };
  for (std::size_t i = 0; i < o.N; ++i)
    for (std::size_t j = 0; j < o.N; ++j)
      for (std::size_t k = 0; k < o.N; ++k)
        for (std::size_t l = 0; l < o.N; ++l)
          for (const auto& lambda : monomials_up_to(o.n, 2)) {
            ConformalElement got = xproduct(unit(i, j), unit(k, l), DualPoly::monomial(lambda));
            ConformalElement want(cur);
            if (lambda.is_zero() && j == k) want = unit(i, l);
            t.add("a[E_ij]_(t^l) a[E_kl] = delta_l0 delta_jk a[E_il]", got == want,
                  "i, j, k, l = " + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) +
                      std::to_string(l + 1) + ", x = " + DualPoly::monomial(lambda).to_string() + ": got " +
                      got.to_string());
          }
  return t.summaries();
}

std::vector<CheckSummary> tc_witness_suite(const SuiteOptions& o) {
  Backend b = backend_of(o);
  Tally t;
  for (const auto& target : weyl_monomials(b.n, b.N, bound_or(o, 3))) {
    if (b.kind == BackendKind::CurPoly) {
      bool has_p = false;
      for (std::size_t i = 0; i < b.N && !has_p; ++i)
        for (std::size_t j = 0; j < b.N; ++j)
          if (target(i, j).p_degree() > 0) has_p = true;
      if (has_p) continue;
    }
    MatWeyl sum(b.n, b.N);
    for (const auto& [c, f] : tc_witness(b, target)) sum += eval(c, f);
    t.add("sum eval(c, f) over the witness = target", sum == target, "target = " + target.to_string());
  }
  return t.summaries();
}

std::vector<CheckSummary> reconstruct_suite(const SuiteOptions& o) {
  Backend b = backend_of(o);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(o.seed));
  Tally t;
  for (std::size_t s = 0; s < samples_or(o, 100); ++s) {
    ConformalElement c = sm::random_conformal(rng, b, 4, 2);
    ConformalElement r = reconstruct(b, eval_table(c, c.t_degree() + 1));
    t.add("reconstruct(eval_table(c)) = c", r == c, "c = " + c.to_string() + "; got " + r.to_string());
  }
  return t.summaries();
}

// ---- residue ---------------------------------------------------------------

template <class R, class Gen>
void residue_ring(Tally& t, std::mt19937& rng, std::size_t samples, Gen coeff, const std::string& ring) {
  for (std::size_t s = 0; s < samples; ++s) {
    auto a = sm::random_distribution<R>(rng, 4, 3, coeff);
    auto b = sm::random_distribution<R>(rng, 4, 3, coeff);
    for (unsigned k = 0; k <= 4; ++k) {
      CheckResult c2 = check_C2_res(a, b, k), c3 = check_C3_res(a, b, k);
      t.add({ring + ": " + "T a_(n) b = -n a_(n-1) b", c2.passed, c2.certificate});
      t.add({ring + ": " + "a_(n) T b = T(a_(n) b) + n a_(n-1) b", c3.passed, c3.certificate});
    }
    BiDistribution<R> x = outer_product(a, b);
    LocalityResult<R> r = locality_test(a, b);
    std::string ab = "a = " + a.to_string() + ", b = " + b.to_string();
    t.add(ring + ": local iff a(w) b(z) = 0", r.local == x.is_zero(), ab);
    if (!r.local) {
      bool survives = true;
      for (unsigned N = 0; N <= 4 && survives; ++N) {
        BiDistribution<R> y = mul_wz_power(x, N);
        auto it = y.coeffs().find({r.position->first + static_cast<long>(N), r.position->second});
        survives = it != y.coeffs().end() && it->second == *r.coefficient;
      }
      t.add(ring + ": certificate survives (w - z)^N", survives, ab);
    }
  }
}

std::vector<CheckSummary> residue_suite(const SuiteOptions& o) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(o.seed));
  std::size_t samples = samples_or(o, 200);
  const std::string& ring = o.ring;
  if (ring != "all" && ring != "rational" && ring != "matrix" && ring != "weyl" && ring != "laurent")
    throw std::invalid_argument("unknown ring " + ring);
  Tally t;
  if (ring == "all" || ring == "rational")
    residue_ring<Rational>(t, rng, samples, [](std::mt19937& g) { return Rational(sm::small_int(g)); }, "rational");
  if (ring == "all" || ring == "matrix") {
    std::size_t N = std::max<std::size_t>(o.N, 2);
    // Sparse matrices give zero products of nonzero factors.
    auto gen = [N](std::mt19937& g) {
      if (std::uniform_int_distribution<int>(0, 1)(g))
        return RatMatrix::unit(N, std::uniform_int_distribution<std::size_t>(0, N - 1)(g),
                               std::uniform_int_distribution<std::size_t>(0, N - 1)(g)) *
               Rational(std::uniform_int_distribution<int>(1, 3)(g));
      return sm::random_matrix(g, N);
    };
    residue_ring<RatMatrix>(t, rng, samples, gen, "matrix");
  }
  if (ring == "all" || ring == "weyl") {
    std::size_t n = o.n;
    residue_ring<WeylElement>(t, rng, samples, [n](std::mt19937& g) { return sm::random_weyl(g, n, 2, 2); }, "weyl");
  }
  if (ring == "all" || ring == "laurent")
    residue_ring<LaurentPoly>(t, rng, samples, [](std::mt19937& g) { return sm::random_laurent(g, 2, 2); }, "laurent");
  return t.summaries();
}

// ---- operad ----------------------------------------------------------------

std::vector<CheckSummary> A_suite(const SuiteOptions& o) {
  Variety v = o.variety;
  std::size_t d = bound_or(o, 4);
  Tally t;
  t.add(check_A1(v, d));
  t.add(check_A2(v, d));
  t.add(check_A3(v, d));
  const std::uint64_t free_dims[] = {1, 2, 12, 120, 1680};
  std::uint64_t fact = 1;
  for (std::size_t m = 1; m <= 5; ++m) {
    fact *= m;
    std::uint64_t expected = v == Variety::Free ? free_dims[m - 1] : fact;
    std::uint64_t got = dim_CI(m, v);
    t.add("dim C(n) by enumeration", got == expected && got == dim_CI_closed_form(m, v),
          "n = " + std::to_string(m) + ": enumerated " + std::to_string(got) + ", expected " + std::to_string(expected));
  }
  return t.summaries();
}

// ---- poisson ---------------------------------------------------------------

std::vector<CheckSummary> poisson_suite(const SuiteOptions& o) {
  if (o.n % 2) throw std::invalid_argument("suite poisson needs an even --n");
  std::size_t n = o.n, k = n / 2;
  std::uint64_t d = bound_or(o, 3);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(o.seed));
  Tally t;
  std::vector<HPoly> mons;
  for (const auto& a : monomials_up_to(n, d)) mons.push_back(HPoly::monomial(a));
  std::vector<std::vector<HPoly>> br(mons.size());
  for (std::size_t a = 0; a < mons.size(); ++a)
    for (std::size_t b = 0; b < mons.size(); ++b) br[a].push_back(poisson(mons[a], mons[b], k));
  for (std::size_t a = 0; a < mons.size(); ++a)
    for (std::size_t b = 0; b < mons.size(); ++b)
      for (std::size_t c = 0; c < mons.size(); ++c) {
        HPoly j = poisson(br[a][b], mons[c], k) + poisson(br[b][c], mons[a], k) + poisson(br[c][a], mons[b], k);
        t.add("{{f,g},h} + {{g,h},f} + {{h,f},g} = 0", j.is_zero(),
              "f = " + mons[a].to_string() + ", g = " + mons[b].to_string() + ", h = " + mons[c].to_string());
      }
  for (const auto& f : mons)
    for (const auto& g : mons) t.add(check_poisson_homomorphism(f, g, k));
  for (const auto& a : monomials_up_to(n, std::max<std::uint64_t>(d, 4))) {
    PolyDerivation D = hamiltonian_field(HPoly::monomial(a), k);
    t.add("D_f lies in H_n", is_in_Hn(D), "f = " + HPoly::monomial(a).to_string());
    t.add("D_f lies in S_n", is_in_Sn(D), "f = " + HPoly::monomial(a).to_string());
  }
  std::size_t samples = samples_or(o, 100);
  for (std::size_t s = 0; s < samples; ++s) {
    HPoly f = sm::random_poly(rng, n, 3, 3), g = sm::random_poly(rng, n, 3, 3);
    PolyDerivation A = hamiltonian_field(f, k), B = hamiltonian_field(g, k);
    PolyDerivation AB = der_bracket(A, B);
    std::string fg = "f = " + f.to_string() + ", g = " + g.to_string();
    t.add("[H_n, H_n] lies in H_n", is_in_Hn(AB), fg);
    t.add("[S_n, S_n] lies in S_n", is_in_Sn(AB), fg);
    std::vector<HPoly> ca, cb;
    for (std::size_t i = 0; i < n; ++i) {
      ca.push_back(sm::random_poly(rng, n, 3, 2));
      cb.push_back(sm::random_poly(rng, n, 3, 2));
    }
    PolyDerivation X(ca), Y(cb);
    t.add("div [X, Y] = X(div Y) - Y(div X)",
          divergence(der_bracket(X, Y)) == der_apply(X, divergence(Y)) - der_apply(Y, divergence(X)),
          "X = " + X.to_string() + ", Y = " + Y.to_string());
  }
  for (std::size_t s = 0; s < samples; ++s) {
    MatWeyl a = sm::random_mat_weyl(rng, 1, 2, 2, 3), b = sm::random_mat_weyl(rng, 1, 2, 2, 3);
    MatWeyl ka = skew_part(a), kb = skew_part(b), ya = sym_part(a), yb = sym_part(b);
    std::string ab = "a = " + a.to_string() + ", b = " + b.to_string();
    t.add("skew(a) + sym(a) = a", ka + ya == a, ab);
    MatWeyl kc = commutator(ka, kb), yc = jordan_product(ya, yb);
    t.add("[Skew, Skew] lies in Skew", involution_sigma(kc) == -kc, ab);
    t.add("Sym o Sym lies in Sym", involution_sigma(yc) == yc, ab);
  }
  for (std::size_t s = 0; s < samples; ++s) {
    MatWeyl a = sm::random_mat_weyl(rng, 2, 2, 3, 3);
    for (std::size_t i = 0; i < 2; ++i) t.add(check_commutation_identity(a, i));
  }
  return t.summaries();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf", "weyl",  "eval",    "C",          "H",          "locality",
                                              "residue", "A", "poisson", "tc-witness", "reconstruct"};
  return names;
}

std::vector<CheckSummary> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "hopf") return hopf_suite(o);
  if (name == "weyl") return weyl_suite(o);
  if (name == "eval") return eval_suite(o);
  if (name == "C") return C_suite(o);
  if (name == "H") return H_suite(o);
  if (name == "locality") return locality_suite(o);
  if (name == "residue") return residue_suite(o);
  if (name == "A") return A_suite(o);
  if (name == "poisson") return poisson_suite(o);
  if (name == "tc-witness") return tc_witness_suite(o);
  if (name == "reconstruct") return reconstruct_suite(o);
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace tcalg::cli
