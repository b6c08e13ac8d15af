#include "tcalg/operad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tcalg/errors.hpp"

namespace tcalg {

namespace {

std::string list_string(const std::vector<std::uint32_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

// Calls visit(choice) for every tuple choice[i] in [0, sizes[i]).
void for_each_tuple(const std::vector<std::size_t>& sizes, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  for (std::size_t s : sizes)
    if (s == 0) return;
  std::vector<std::size_t> choice(sizes.size(), 0);
  while (true) {
    visit(choice);
    std::size_t i = 0;
    while (i < sizes.size() && ++choice[i] == sizes[i]) choice[i++] = 0;
    if (i == sizes.size()) return;
  }
}

// Parses one subtree starting at pos; returns the position after it.
std::size_t parse_subtree(const OperadElt::Word& w, std::size_t pos) {
  if (pos >= w.size()) throw DimensionMismatch("malformed word");
  if (w[pos] != 0) return pos + 1;
  return parse_subtree(w, parse_subtree(w, pos + 1));
}

std::string subtree_string(const OperadElt::Word& w, std::size_t& pos, bool wrap) {
  if (w[pos] != 0) return "x" + std::to_string(w[pos++]);
  ++pos;
  std::string left = subtree_string(w, pos, true);
  std::string right = subtree_string(w, pos, true);
  std::string s = left + " " + right;
  return wrap ? "(" + s + ")" : s;
}

std::vector<OperadElt::Word> tree_shapes(std::size_t n) {
  if (n == 1) return {{1}};
  std::vector<OperadElt::Word> out;
  for (std::size_t k = 1; k < n; ++k)
    for (const auto& l : tree_shapes(k))
      for (const auto& r : tree_shapes(n - k)) {
        OperadElt::Word w{0};
        w.insert(w.end(), l.begin(), l.end());
        w.insert(w.end(), r.begin(), r.end());
        out.push_back(w);
      }
  return out;
}

std::vector<OperadElt> basis(Variety v, std::size_t n) {
  std::vector<OperadElt> out;
  for (const auto& w : basis_words(v, n)) out.push_back(OperadElt::word(v, n, w));
  return out;
}

std::string instances(std::uint64_t count) { return " (" + std::to_string(count) + " instances)"; }

}  // namespace

// ---- Partition -------------------------------------------------------------

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DimensionMismatch("a partition needs at least one part");
  for (auto p : parts_) {
    if (p == 0) throw DimensionMismatch("partition parts must be positive");
    total_ += p;
  }
}

Partition Partition::identity(std::size_t n) { return Partition(std::vector<std::uint32_t>(n, 1)); }

Partition Partition::trivial(std::size_t m) { return Partition({static_cast<std::uint32_t>(m)}); }

std::string Partition::to_string() const { return list_string(parts_); }

std::vector<Partition> partitions(std::uint32_t m, std::size_t n) {
  std::vector<Partition> out;
  if (n == 0 || m < n) return out;
  std::vector<std::uint32_t> parts(n, 1);
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      parts[i] = left;
      out.emplace_back(parts);
      return;
    }
    for (std::uint32_t p = 1; p + (n - i - 1) <= left; ++p) {
      parts[i] = p;
      fill(i + 1, left - p);
    }
  };
  fill(0, m);
  return out;
}

// ---- Perm ------------------------------------------------------------------

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto k : images_) {
    if (k == 0 || k > images_.size() || seen[k])
      throw DimensionMismatch("not a permutation: " + list_string(images_));
    seen[k] = true;
  }
}

Perm Perm::identity(std::size_t m) {
  std::vector<std::uint32_t> v(m);
  std::iota(v.begin(), v.end(), 1u);
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> v(images_.size());
  for (std::uint32_t k = 1; k <= images_.size(); ++k) v[images_[k - 1] - 1] = k;
  return Perm(std::move(v));
}

Perm operator*(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw DimensionMismatch("permutation size mismatch");
  std::vector<std::uint32_t> v(s.size());
  for (std::uint32_t k = 1; k <= s.size(); ++k) v[k - 1] = s(t(k));
  return Perm(std::move(v));
}

std::string Perm::to_string() const { return list_string(images_); }

std::vector<Perm> permutations(std::size_t m) {
  std::vector<std::uint32_t> v(m);
  std::iota(v.begin(), v.end(), 1u);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---- partition combinatorics -----------------------------------------------

std::pair<std::uint32_t, std::uint32_t> index_to_pair(const Partition& pi, std::uint32_t k) {
  if (k == 0 || k > pi.total())
    throw IndexOutOfRange("index " + std::to_string(k) + " outside 1.." + std::to_string(pi.total()));
  for (std::uint32_t i = 0; i < pi.size(); ++i) {
    if (k <= pi[i]) return {i + 1, k};
    k -= pi[i];
  }
  throw IndexOutOfRange("unreachable");
}

std::uint32_t pair_to_index(const Partition& pi, std::uint32_t i, std::uint32_t j) {
  if (i == 0 || i > pi.size() || j == 0 || j > pi[i - 1])
    throw IndexOutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + pi.to_string());
  std::uint32_t k = j;
  for (std::uint32_t r = 0; r + 1 < i; ++r) k += pi[r];
  return k;
}

Partition sigma_on_partition(const Perm& s, const Partition& pi) {
  if (s.size() != pi.size()) throw DimensionMismatch("permutation size does not match the partition");
  Perm inv = s.inverse();
  std::vector<std::uint32_t> parts(pi.size());
  for (std::uint32_t i = 1; i <= pi.size(); ++i) parts[i - 1] = pi[inv(i) - 1];
  return Partition(std::move(parts));
}

Perm block_composition(const Perm& s, const Partition& pi, const std::vector<Perm>& taus) {
  if (s.size() != pi.size() || taus.size() != pi.size())
    throw DimensionMismatch("block composition needs one permutation per block");
  for (std::size_t i = 0; i < taus.size(); ++i)
    if (taus[i].size() != pi[i]) throw DimensionMismatch("block permutation size does not match its block");
  Partition spi = sigma_on_partition(s, pi);
  std::vector<std::uint32_t> v(pi.total());
  for (std::uint32_t k = 1; k <= pi.total(); ++k) {
    auto [i, j] = index_to_pair(pi, k);
    v[k - 1] = pair_to_index(spi, s(i), taus[i - 1](j));
  }
  return Perm(std::move(v));
}

Partition partition_compose(const Partition& pi, const Partition& tau) {
  if (tau.size() != pi.total())
    throw DimensionMismatch("partition " + tau.to_string() + " must have " + std::to_string(pi.total()) + " parts");
  std::vector<std::uint32_t> q(pi.size(), 0);
  for (std::uint32_t k = 1; k <= pi.total(); ++k) q[index_to_pair(pi, k).first - 1] += tau[k - 1];
  return Partition(std::move(q));
}

// ---- OperadElt -------------------------------------------------------------

std::string variety_name(Variety v) { return v == Variety::Free ? "free" : "assoc"; }

OperadElt OperadElt::identity(Variety v) { return word(v, 1, {1}); }

OperadElt OperadElt::mu(Variety v) { return word(v, 2, {0, 1, 2}); }

OperadElt OperadElt::word(Variety v, std::size_t arity, const Word& w, const Rational& c) {
  OperadElt out(v, arity);
  out.add_term(w, c);
  return out;
}

void OperadElt::add_term(const Word& w, const Rational& c) {
  Word norm;
  std::vector<bool> seen(arity_ + 1, false);
  for (int s : w) {
    if (s < 0) throw DimensionMismatch("negative leaf label");
    if (s > 0) {
      if (static_cast<std::size_t>(s) > arity_ || seen[s])
        throw DimensionMismatch("word is not multilinear in x1..x" + std::to_string(arity_));
      seen[s] = true;
    }
    if (s > 0 || variety_ == Variety::Free) norm.push_back(s);
  }
  for (std::size_t l = 1; l <= arity_; ++l)
    if (!seen[l]) throw DimensionMismatch("word misses x" + std::to_string(l));
  if (variety_ == Variety::Free && parse_subtree(norm, 0) != norm.size()) throw DimensionMismatch("malformed tree");
  accumulate(terms_, norm, c);
}

OperadElt& OperadElt::operator+=(const OperadElt& o) {
  if (variety_ != o.variety_ || arity_ != o.arity_) throw DimensionMismatch("operad element mismatch");
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

OperadElt& OperadElt::operator*=(const Rational& c) {
  if (tcalg::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string word_string(const OperadElt::Word& w) {
  bool flat = std::none_of(w.begin(), w.end(), [](int s) { return s == 0; });
  if (flat) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " x" : "x") + std::to_string(w[i]);
    return out;
  }
  std::size_t pos = 0;
  return subtree_string(w, pos, false);
}

std::string OperadElt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string body = word_string(w);
    if (mag == 1)
      out += body;
    else
      out += tcalg::to_string(mag) + "*" + (w.size() > 1 ? "(" + body + ")" : body);
  }
  return out;
}

OperadElt tree_compose(const OperadElt& f, const Partition& pi, const std::vector<OperadElt>& gs) {
  if (f.arity() != pi.size() || gs.size() != pi.size())
    throw DimensionMismatch("composition needs " + std::to_string(f.arity()) + " inner elements matching the partition");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].variety() != f.variety()) throw DimensionMismatch("variety mismatch in composition");
    if (gs[i].arity() != pi[i]) throw DimensionMismatch("inner element arity does not match its block");
  }
  OperadElt out(f.variety(), pi.total());
  std::vector<std::vector<std::pair<OperadElt::Word, Rational>>> inner;
  std::vector<std::size_t> sizes;
  for (const auto& g : gs) {
    inner.emplace_back(g.terms().begin(), g.terms().end());
    sizes.push_back(g.terms().size());
  }
  for (const auto& [w, c] : f.terms())
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& choice) {
      OperadElt::Word result;
      Rational coeff = c;
      for (int s : w) {
        if (s == 0) {
          result.push_back(0);
          continue;
        }
        const auto& [gw, gc] = inner[s - 1][choice[s - 1]];
        coeff *= gc;
        for (int t : gw)
          result.push_back(t == 0 ? 0 : static_cast<int>(pair_to_index(pi, s, t)));
      }
      out.add_term(result, coeff);
    });
  return out;
}

OperadElt perm_on_operad(const Perm& s, const OperadElt& f, WordAction action) {
  if (s.size() != f.arity()) throw DimensionMismatch("permutation size does not match the arity");
  Perm p = action == WordAction::Substitute ? s : s.inverse();
  OperadElt out(f.variety(), f.arity());
  for (const auto& [w, c] : f.terms()) {
    OperadElt::Word r = w;
    for (int& x : r)
      if (x > 0) x = static_cast<int>(p(x));
    out.add_term(r, c);
  }
  return out;
}

std::vector<OperadElt::Word> basis_words(Variety v, std::size_t n) {
  if (n == 0) throw DimensionMismatch("arity must be at least 1");
  std::vector<OperadElt::Word> shapes = v == Variety::Free ? tree_shapes(n) : std::vector<OperadElt::Word>{OperadElt::Word(n, 1)};
  std::vector<OperadElt::Word> out;
  for (const auto& shape : shapes)
    for (const auto& p : permutations(n)) {
      OperadElt::Word w = shape;
      std::size_t leaf = 0;
      for (int& x : w)
        if (x != 0) x = static_cast<int>(p.images()[leaf++]);
      out.push_back(w);
    }
  return out;
}

std::uint64_t dim_CI(std::size_t n, Variety v) {
  OperadElt span(v, n);
  for (const auto& w : basis_words(v, n)) span.add_term(w, Rational(1));
  return span.terms().size();
}

std::uint64_t dim_CI_closed_form(std::size_t n, Variety v) {
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  if (v == Variety::Assoc) return fact;
  // Catalan(n - 1) = C(2n - 2, n - 1) / n.
  std::uint64_t cat = binomial(2 * n - 2, n - 1).get_num().get_ui() / n;
  return fact * cat;
}

// ---- axiom checks ----------------------------------------------------------

CheckResult check_A1(Variety v, std::size_t max_leaves) {
  CheckResult r{"Comp^tau(Comp^pi(phi, chi), psi) = Comp^(pi tau)(phi, Comp^tau_i(chi_i, psi_i))", true, ""};
  std::uint64_t count = 0;
  for (std::uint32_t p = 1; p <= max_leaves; ++p)
    for (std::uint32_t m = 1; m <= p; ++m)
      for (std::uint32_t n = 1; n <= m; ++n)
        for (const auto& pi : partitions(m, n))
          for (const auto& tau : partitions(p, m)) {
            auto phis = basis(v, n);
            std::vector<std::vector<OperadElt>> chis, psis;
            std::vector<std::size_t> sizes{phis.size()};
            for (std::size_t i = 0; i < n; ++i) {
              chis.push_back(basis(v, pi[i]));
              sizes.push_back(chis.back().size());
            }
            for (std::size_t j = 0; j < m; ++j) {
              psis.push_back(basis(v, tau[j]));
              sizes.push_back(psis.back().size());
            }
            Partition pt = partition_compose(pi, tau);
            for_each_tuple(sizes, [&](const std::vector<std::size_t>& c) {
              const OperadElt& phi = phis[c[0]];
              std::vector<OperadElt> chi, psi;
              for (std::size_t i = 0; i < n; ++i) chi.push_back(chis[i][c[1 + i]]);
              for (std::size_t j = 0; j < m; ++j) psi.push_back(psis[j][c[1 + n + j]]);
              OperadElt lhs = tree_compose(tree_compose(phi, pi, chi), tau, psi);
              std::vector<OperadElt> inner;
              for (std::uint32_t i = 1; i <= n; ++i) {
                std::vector<std::uint32_t> sub;
                std::vector<OperadElt> psi_i;
                for (std::uint32_t t = 1; t <= pi[i - 1]; ++t) {
                  std::uint32_t j = pair_to_index(pi, i, t);
                  sub.push_back(tau[j - 1]);
                  psi_i.push_back(psi[j - 1]);
                }
                inner.push_back(tree_compose(chi[i - 1], Partition(sub), psi_i));
              }
              OperadElt rhs = tree_compose(phi, pt, inner);
              ++count;
              if (r.passed && !(lhs == rhs)) {
                r.passed = false;
                r.certificate = "pi = " + pi.to_string() + ", tau = " + tau.to_string() + ": lhs = " +
                                lhs.to_string() + "; rhs = " + rhs.to_string();
              }
            });
          }
  r.identity += instances(count);
  return r;
}

CheckResult check_A2(Variety v, std::size_t max_arity) {
  CheckResult r{"Comp^id(n)(f, id, ..., id) = Comp^(n)(id, f) = f", true, ""};
  std::uint64_t count = 0;
  OperadElt id = OperadElt::identity(v);
  for (std::size_t n = 1; n <= max_arity; ++n)
    for (const auto& f : basis(v, n)) {
      OperadElt a = tree_compose(f, Partition::identity(n), std::vector<OperadElt>(n, id));
      OperadElt b = tree_compose(id, Partition::trivial(n), {f});
      ++count;
      if (r.passed && !(a == f && b == f)) {
        r.passed = false;
        r.certificate = "f = " + f.to_string() + ": " + a.to_string() + ", " + b.to_string();
      }
    }
  r.identity += instances(count);
  return r;
}

CheckResult check_A3(Variety v, std::size_t max_leaves, WordAction action) {
  CheckResult r{"Comp^(s pi)(s phi, tau_(s^-1 i) psi_(s^-1 i)) = s^pi(tau) Comp^pi(phi, psi)", true, ""};
  std::uint64_t count = 0, alt_failures = 0;
  for (std::uint32_t m = 1; m <= max_leaves; ++m)
    for (std::uint32_t n = 1; n <= m; ++n)
      for (const auto& pi : partitions(m, n)) {
        auto sigmas = permutations(n);
        auto phis = basis(v, n);
        std::vector<std::vector<Perm>> taus;
        std::vector<std::vector<OperadElt>> psis;
        std::vector<std::size_t> sizes{sigmas.size(), phis.size()};
        for (std::size_t i = 0; i < n; ++i) {
          taus.push_back(permutations(pi[i]));
          sizes.push_back(taus.back().size());
        }
        for (std::size_t i = 0; i < n; ++i) {
          psis.push_back(basis(v, pi[i]));
          sizes.push_back(psis.back().size());
        }
        for_each_tuple(sizes, [&](const std::vector<std::size_t>& c) {
          const Perm& s = sigmas[c[0]];
          const OperadElt& phi = phis[c[1]];
          std::vector<Perm> tau;
          std::vector<OperadElt> psi;
          for (std::size_t i = 0; i < n; ++i) tau.push_back(taus[i][c[2 + i]]);
          for (std::size_t i = 0; i < n; ++i) psi.push_back(psis[i][c[2 + n + i]]);
          Perm inv = s.inverse();
          Partition spi = sigma_on_partition(s, pi);
          std::vector<OperadElt> moved;
          for (std::uint32_t i = 1; i <= n; ++i)
            moved.push_back(perm_on_operad(tau[inv(i) - 1], psi[inv(i) - 1], action));
          OperadElt lhs = tree_compose(perm_on_operad(s, phi, action), spi, moved);
          OperadElt rhs = perm_on_operad(block_composition(s, pi, tau), tree_compose(phi, pi, psi), action);
          ++count;
          if (lhs == rhs) return;
          // The tau_i psi_(s^-1 i) reading, defined only when the sizes agree.
          bool alt_ok = true;
          std::vector<OperadElt> alt;
          for (std::uint32_t i = 1; i <= n && alt_ok; ++i) {
            if (tau[i - 1].size() != psi[inv(i) - 1].arity()) {
              alt_ok = false;
              break;
            }
            alt.push_back(perm_on_operad(tau[i - 1], psi[inv(i) - 1], action));
          }
          if (alt_ok) alt_ok = tree_compose(perm_on_operad(s, phi, action), spi, alt) == rhs;
          if (!alt_ok) ++alt_failures;
          if (r.passed) {
            r.passed = false;
            r.certificate = "sigma = " + s.to_string() + ", pi = " + pi.to_string() + ", phi = " + phi.to_string() +
                            ": lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
          }
        });
      }
  r.identity += instances(count);
  if (!r.passed)
    r.certificate += "; tau_i psi_(s^-1 i) reading fails on " + std::to_string(alt_failures) + " instances";
  return r;
}

std::vector<CheckResult> check_M3(Variety v, std::size_t max_arity, WordAction action) {
  CheckResult displayed{"(s t) f = t (s f)", true, ""};
  CheckResult left{"(s t) f = s (t f)", true, ""};
  std::uint64_t count = 0;
  for (std::size_t n = 1; n <= max_arity; ++n) {
    auto perms = permutations(n);
    for (const auto& f : basis(v, n))
      for (const auto& s : perms)
        for (const auto& t : perms) {
          OperadElt st = perm_on_operad(s * t, f, action);
          ++count;
          if (displayed.passed && !(st == perm_on_operad(t, perm_on_operad(s, f, action), action))) {
            displayed.passed = false;
            displayed.certificate = "s = " + s.to_string() + ", t = " + t.to_string() + ", f = " + f.to_string();
          }
          if (left.passed && !(st == perm_on_operad(s, perm_on_operad(t, f, action), action))) {
            left.passed = false;
            left.certificate = "s = " + s.to_string() + ", t = " + t.to_string() + ", f = " + f.to_string();
          }
        }
  }
  displayed.identity += instances(count);
  left.identity += instances(count);
  return {displayed, left};
}

}  // namespace tcalg
