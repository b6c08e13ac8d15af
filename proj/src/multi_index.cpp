#include "tcalg/multi_index.hpp"

#include <numeric>

#include "tcalg/errors.hpp"

namespace tcalg {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw IndexOutOfRange("variable index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
  MultiIndex out(n);
  out.e_[i] = 1;
  return out;
}

std::uint64_t MultiIndex::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (size() != other.size()) throw DimensionMismatch("multi-index length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw DimensionMismatch("multi-index length mismatch");
  MultiIndex out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += other.e_[i];
  return out;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  if (!other.leq(*this)) return std::nullopt;
  MultiIndex out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= other.e_[i];
  return out;
}

Rational MultiIndex::factorial() const {
  Rational out(1);
  for (auto a : e_) out *= tcalg::factorial(a);
  return out;
}

Rational MultiIndex::falling_factorial(const MultiIndex& gamma) const {
  if (!gamma.leq(*this)) return Rational(0);
  Rational out(1);
  for (std::size_t i = 0; i < e_.size(); ++i)
    for (std::uint32_t k = 0; k < gamma.e_[i]; ++k) out *= e_[i] - k;
  return out;
}

Rational MultiIndex::binomial(const MultiIndex& gamma) const {
  if (!gamma.leq(*this)) return Rational(0);
  Rational out(1);
  for (std::size_t i = 0; i < e_.size(); ++i) out *= tcalg::binomial(e_[i], gamma.e_[i]);
  return out;
}

MultiIndex MultiIndex::resized(std::size_t n) const {
  MultiIndex out(n);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i < n)
      out.e_[i] = e_[i];
    else if (e_[i] != 0)
      throw DimensionMismatch("cannot drop a variable with nonzero exponent");
  }
  return out;
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
  MultiIndex out = *this;
  out.e_.insert(out.e_.end(), other.e_.begin(), other.e_.end());
  return out;
}

bool GrLexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da > db;
  return a.entries() > b.entries();
}

namespace {

void fill(std::size_t n, std::size_t pos, std::uint64_t remaining, std::vector<std::uint32_t>& cur,
          std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<std::uint32_t>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (std::uint64_t k = remaining + 1; k-- > 0;) {
    cur[pos] = static_cast<std::uint32_t>(k);
    fill(n, pos + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> cur(n, 0);
  fill(n, 0, d, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, std::uint64_t d) {
  std::vector<MultiIndex> out;
  for (std::uint64_t k = d + 1; k-- > 0;) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& alpha) {
  std::vector<MultiIndex> out{MultiIndex(alpha.size())};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<MultiIndex> next;
    for (const auto& b : out)
      for (std::uint32_t k = 0; k <= alpha[i]; ++k) {
        MultiIndex c = b;
        c[i] = k;
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

std::string monomial_string(const MultiIndex& alpha, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var + std::to_string(i + 1);
    if (alpha[i] > 1) out += '^' + std::to_string(alpha[i]);
  }
  return out;
}

}  // namespace tcalg
