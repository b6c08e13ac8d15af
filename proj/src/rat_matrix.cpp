#include "tcalg/rat_matrix.hpp"

#include "tcalg/errors.hpp"

namespace tcalg {

RatMatrix RatMatrix::identity(std::size_t N) { return scalar(N, Rational(1)); }

RatMatrix RatMatrix::unit(std::size_t N, std::size_t i, std::size_t j) {
  if (i >= N || j >= N) throw IndexOutOfRange("matrix unit outside the matrix");
  RatMatrix out(N);
  out(i, j) = 1;
  return out;
}

RatMatrix RatMatrix::scalar(std::size_t N, const Rational& c) {
  RatMatrix out(N);
  for (std::size_t i = 0; i < N; ++i) out(i, i) = c;
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!tcalg::is_zero(x)) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (o.N_ != N_) throw DimensionMismatch("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (o.N_ != N_) throw DimensionMismatch("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.N_ != b.N_) throw DimensionMismatch("matrix size mismatch");
  RatMatrix out(a.N_);
  for (std::size_t i = 0; i < a.N_; ++i)
    for (std::size_t k = 0; k < a.N_; ++k) {
      if (tcalg::is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < a.N_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(N_);
  for (std::size_t i = 0; i < N_; ++i)
    for (std::size_t j = 0; j < N_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::kron_identity(std::size_t k) const {
  RatMatrix out(N_ * k);
  for (std::size_t i = 0; i < N_; ++i)
    for (std::size_t j = 0; j < N_; ++j)
      for (std::size_t d = 0; d < k; ++d) out(i * k + d, j * k + d) = (*this)(i, j);
  return out;
}

std::string RatMatrix::to_string() const {
  if (N_ == 1) return tcalg::to_string(a_[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < N_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < N_; ++j) out += (j ? ", " : "") + tcalg::to_string((*this)(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace tcalg
