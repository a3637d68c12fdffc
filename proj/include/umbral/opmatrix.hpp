#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "umbral/series.hpp"

namespace umbral {

/// Exact matrix of a linear operator on the monomial basis: column j holds
/// the coefficients of T x^j, row i the coefficient of x^i.
class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t rows, std::size_t cols);

  /// Square matrix of `action` on degrees 0..max_degree; throws
  /// std::out_of_range("truncation exceeded") if some image has degree
  /// above max_degree.
  static OperatorMatrix from_action(std::size_t max_degree, const std::function<Poly(const Poly&)>& action);
  static OperatorMatrix identity(std::size_t max_degree);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RationalFunction& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  RationalFunction& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Poly column(std::size_t c) const;
  void set_column(std::size_t c, const Poly& p);
  /// Throws std::invalid_argument when deg p >= cols().
  Poly apply(const Poly& p) const;

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalFunction> a_;
};

/// Matrix of a series acting on degrees 0..max_degree.
OperatorMatrix series_matrix(const PsiSequence& psi, const OperatorSeries& f, std::size_t max_degree);

/// Matrix of xhat_psi from degrees 0..max_degree into 0..max_degree+1.
OperatorMatrix xhat_psi_matrix(const PsiSequence& psi, std::size_t max_degree);

/// Pincherle derivative by its definition f xhat_psi - xhat_psi f, as a
/// square matrix on degrees 0..max_degree. The series must act exactly on
/// degree max_degree + 1.
OperatorMatrix pincherle_matrix(const PsiSequence& psi, const OperatorSeries& f, std::size_t max_degree);

}  // namespace umbral
