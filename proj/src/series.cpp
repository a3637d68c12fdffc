#include "umbral/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

OperatorSeries::OperatorSeries(std::vector<RationalFunction> coeffs, std::size_t order) : a_(std::move(coeffs)) {
  a_.resize(order + 1);
}

OperatorSeries OperatorSeries::constant(RationalFunction c, std::size_t order) {
  return OperatorSeries({std::move(c)}, order);
}

OperatorSeries OperatorSeries::derivative(std::size_t order) {
  if (order == 0) throw std::invalid_argument("the series D needs order >= 1");
  return OperatorSeries({RationalFunction(0), RationalFunction(1)}, order);
}

OperatorSeries OperatorSeries::truncated(std::size_t order) const { return OperatorSeries(a_, order); }

OperatorSeries operator+(const OperatorSeries& f, const OperatorSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<RationalFunction> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = f.a_[k] + g.a_[k];
  return OperatorSeries(std::move(c), n);
}

OperatorSeries operator-(const OperatorSeries& f, const OperatorSeries& g) {
  return f + g.scaled(RationalFunction(-1));
}

OperatorSeries operator*(const OperatorSeries& f, const OperatorSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<RationalFunction> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.a_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (g.a_[j].is_zero()) continue;
      c[i + j] += f.a_[i] * g.a_[j];
    }
  }
  return OperatorSeries(std::move(c), n);
}

OperatorSeries OperatorSeries::scaled(const RationalFunction& s) const {
  OperatorSeries r = *this;
  for (auto& c : r.a_) c = c * s;
  return r;
}

OperatorSeries OperatorSeries::inverse() const {
  if (!is_invertible()) throw std::domain_error("non-invertible series");
  const std::size_t n = order();
  std::vector<RationalFunction> b(n + 1);
  const RationalFunction inv0 = a_[0].inverse();
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    RationalFunction acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!a_[j].is_zero()) acc += a_[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return OperatorSeries(std::move(b), n);
}

OperatorSeries OperatorSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  OperatorSeries result = identity(order());
  OperatorSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

OperatorSeries OperatorSeries::pincherle() const {
  if (order() == 0) return constant(RationalFunction(0), 0);
  std::vector<RationalFunction> c(order());
  for (std::size_t k = 1; k <= order(); ++k) c[k - 1] = a_[k] * RationalFunction(static_cast<long>(k));
  return OperatorSeries(std::move(c), order() - 1);
}

Poly OperatorSeries::apply(const PsiSequence& psi, const Poly& p) const {
  if (p.degree() > static_cast<int>(order()))
    throw std::out_of_range("truncation exceeded: series of order " + std::to_string(order()) +
                            " applied to degree " + std::to_string(p.degree()));
  const auto c = p.coeffs();
  std::vector<RationalFunction> out(c.size());
  // D^k x^n = n_psi!/(n-k)_psi! x^{n-k}
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    for (std::size_t k = 0; k <= n; ++k) {
      if (a_[k].is_zero()) continue;
      out[n - k] += a_[k] * c[n] * psi.falling(n, k);
    }
  }
  return Poly(std::move(out));
}

DeltaOperator::DeltaOperator(OperatorSeries series) : s_(std::move(series)) {
  if (!s_.is_delta()) throw std::invalid_argument("not a delta operator: need a_0 = 0 and a_1 != 0");
}

OperatorSeries s_factor(const DeltaOperator& q) {
  const auto& a = q.series().coeffs();
  return OperatorSeries(std::vector<RationalFunction>(a.begin() + 1, a.end()), q.order() - 1);
}

OperatorSeries translation_series(const PsiSequence& psi, const RationalFunction& a, std::size_t order) {
  std::vector<RationalFunction> c(order + 1);
  RationalFunction ak(1);
  for (std::size_t k = 0; k <= order; ++k) {
    c[k] = ak * psi.value(k);
    ak *= a;
  }
  return OperatorSeries(std::move(c), order);
}

OperatorSeries exp_psi_square(const PsiSequence& psi, std::size_t order) {
  std::vector<RationalFunction> c(order + 1);
  for (std::size_t k = 0; 2 * k <= order; ++k) c[2 * k] = psi.value(k);
  return OperatorSeries(std::move(c), order);
}

OperatorSeries laguerre_order_S(const BigRational& alpha, std::size_t order) {
  // (1 - t)^e = sum_k C(e, k) (-t)^k with C(e, k) = e (e-1) ... (e-k+1) / k!
  const BigRational e = alpha + 1;
  std::vector<RationalFunction> c(order + 1);
  BigRational binom = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    c[k] = RationalFunction(k % 2 == 0 ? binom : BigRational(-binom));
    binom = binom * (e - static_cast<long>(k)) / static_cast<long>(k + 1);
  }
  return OperatorSeries(std::move(c), order);
}

namespace delta {

DeltaOperator partial(std::size_t order) { return DeltaOperator(OperatorSeries::derivative(order)); }

DeltaOperator laguerre(std::size_t order) {
  std::vector<RationalFunction> c(order + 1, RationalFunction(-1));
  c[0] = RationalFunction(0);
  return DeltaOperator(OperatorSeries(std::move(c), order));
}

DeltaOperator partial_plus_square(std::size_t order) {
  return DeltaOperator(OperatorSeries({RationalFunction(0), RationalFunction(1), RationalFunction(1)}, order));
}

DeltaOperator abel(const PsiSequence& psi, const RationalFunction& a, std::size_t order) {
  if (order == 0) throw std::invalid_argument("delta operator needs order >= 1");
  const OperatorSeries shift = translation_series(psi, a, order - 1);
  std::vector<RationalFunction> c{RationalFunction(0)};
  c.insert(c.end(), shift.coeffs().begin(), shift.coeffs().end());
  return DeltaOperator(OperatorSeries(std::move(c), order));
}

}  // namespace delta

}  // namespace umbral
