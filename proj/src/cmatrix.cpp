#include "umbral/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace umbral {

namespace {

void require_same(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : n_(dim), a_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a, b);
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a, b);
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a, b);
  const std::size_t n = a.n_;
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a.a_[i * n + k];
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r.a_[i * n + j] += aik * b.a_[k * n + j];
    }
  return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (auto& v : r.a_) v *= s;
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double ComplexMatrix::inf_norm() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_diagonal(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && std::abs((*this)(i, j)) > tol) return false;
  return true;
}

std::vector<Complex> ComplexMatrix::diag() const {
  std::vector<Complex> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix ComplexMatrix::diag_sqrt() const {
  if (!is_diagonal()) throw std::domain_error("not diagonal");
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i) r(i, i) = std::sqrt((*this)(i, i));
  return r;
}

ComplexMatrix ComplexMatrix::power(int e) const {
  if (e < 0) throw std::invalid_argument("negative matrix power");
  ComplexMatrix result = identity(n_);
  ComplexMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Complex ComplexMatrix::determinant() const {
  std::vector<Complex> lu = a_;
  const std::size_t n = n_;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu[i * n + k]) > std::abs(lu[piv * n + k])) piv = i;
    if (lu[piv * n + k] == Complex{}) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[piv * n + j]);
      det = -det;
    }
    const Complex p = lu[k * n + k];
    det *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu[i * n + k] / p;
      if (f == Complex{}) continue;
      for (std::size_t j = k; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
    }
  }
  return det;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

}  // namespace umbral
