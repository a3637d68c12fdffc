#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace umbral {

using Complex = std::complex<double>;

/// Dense square matrix of double-precision complex values, row-major.
class ComplexMatrix {
 public:
  /// Zero matrix; throws std::invalid_argument for dim == 0.
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  std::size_t dim() const { return n_; }
  Complex operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

  ComplexMatrix adjoint() const;
  /// max |a_rc|
  double inf_norm() const;
  bool is_diagonal(double tol = 0.0) const;
  std::vector<Complex> diag() const;
  /// Entrywise principal square root of a diagonal matrix; throws
  /// std::domain_error("not diagonal") otherwise.
  ComplexMatrix diag_sqrt() const;
  /// Non-negative integer power by repeated squaring.
  ComplexMatrix power(int e) const;
  /// LU with partial pivoting.
  Complex determinant() const;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

/// A*B - B*A
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace umbral
