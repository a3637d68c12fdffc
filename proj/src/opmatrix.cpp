#include "umbral/opmatrix.hpp"

#include <stdexcept>

namespace umbral {

OperatorMatrix::OperatorMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("operator matrix needs positive dimensions");
}

OperatorMatrix OperatorMatrix::from_action(std::size_t max_degree, const std::function<Poly(const Poly&)>& action) {
  OperatorMatrix m(max_degree + 1, max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) {
    const Poly image = action(Poly::monomial(RationalFunction(1), j));
    if (image.degree() > static_cast<int>(max_degree))
      throw std::out_of_range("truncation exceeded: T x^" + std::to_string(j) + " has degree " +
                              std::to_string(image.degree()));
    m.set_column(j, image);
  }
  return m;
}

OperatorMatrix OperatorMatrix::identity(std::size_t max_degree) {
  OperatorMatrix m(max_degree + 1, max_degree + 1);
  for (std::size_t i = 0; i <= max_degree; ++i) m(i, i) = RationalFunction(1);
  return m;
}

Poly OperatorMatrix::column(std::size_t c) const {
  std::vector<RationalFunction> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return Poly(std::move(v));
}

void OperatorMatrix::set_column(std::size_t c, const Poly& p) {
  if (p.degree() >= static_cast<int>(rows_)) throw std::out_of_range("truncation exceeded: column does not fit");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = p.coeff(r);
}

Poly OperatorMatrix::apply(const Poly& p) const {
  if (p.degree() >= static_cast<int>(cols_)) throw std::invalid_argument("polynomial degree exceeds matrix domain");
  std::vector<RationalFunction> out(rows_);
  const auto c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const RationalFunction& m = (*this)(r, j);
      if (!m.is_zero()) out[r] += m * c[j];
    }
  }
  return Poly(std::move(out));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  OperatorMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RationalFunction& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch");
  OperatorMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool OperatorMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

OperatorMatrix series_matrix(const PsiSequence& psi, const OperatorSeries& f, std::size_t max_degree) {
  return OperatorMatrix::from_action(max_degree, [&](const Poly& p) { return f.apply(psi, p); });
}

OperatorMatrix xhat_psi_matrix(const PsiSequence& psi, std::size_t max_degree) {
  OperatorMatrix m(max_degree + 2, max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j)
    m.set_column(j, apply_xhat_psi(psi, Poly::monomial(RationalFunction(1), j)));
  return m;
}

OperatorMatrix pincherle_matrix(const PsiSequence& psi, const OperatorSeries& f, std::size_t max_degree) {
  const OperatorMatrix x_small = xhat_psi_matrix(psi, max_degree);
  const OperatorMatrix f_big = series_matrix(psi, f, max_degree + 1);
  const OperatorMatrix f_small = series_matrix(psi, f, max_degree);
  // f xhat maps 0..d into 0..d+1; xhat f likewise. Their difference lies in 0..d.
  const OperatorMatrix lhs = f_big * x_small;
  const OperatorMatrix rhs = xhat_psi_matrix(psi, max_degree) * f_small;
  const OperatorMatrix diff = lhs - rhs;
  OperatorMatrix out(max_degree + 1, max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) {
    if (!diff(max_degree + 1, j).is_zero()) throw std::logic_error("commutator raised degree");
    for (std::size_t i = 0; i <= max_degree; ++i) out(i, j) = diff(i, j);
  }
  return out;
}

}  // namespace umbral
