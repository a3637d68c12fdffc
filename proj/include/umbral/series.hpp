#pragma once

#include <cstddef>
#include <vector>

#include "umbral/psi.hpp"

namespace umbral {

/// Truncated formal power series a_0 + a_1 D + ... + a_N D^N in the
/// psi-derivative D, representing a d_psi-shift-invariant operator.
///
/// The series itself does not depend on psi; psi enters only when the series
/// acts on polynomials. Acting on degree d uses a_0 ... a_d, so the action is
/// exact whenever order() >= d.
class OperatorSeries {
 public:
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  OperatorSeries(std::vector<RationalFunction> coeffs, std::size_t order);

  static OperatorSeries constant(RationalFunction c, std::size_t order);
  static OperatorSeries identity(std::size_t order) { return constant(RationalFunction(1), order); }
  /// The series D.
  static OperatorSeries derivative(std::size_t order);

  std::size_t order() const { return a_.size() - 1; }
  const RationalFunction& coeff(std::size_t k) const { return a_.at(k); }
  const std::vector<RationalFunction>& coeffs() const { return a_; }
  bool is_invertible() const { return !a_[0].is_zero(); }
  bool is_delta() const { return a_[0].is_zero() && a_.size() > 1 && !a_[1].is_zero(); }

  OperatorSeries truncated(std::size_t order) const;

  friend OperatorSeries operator+(const OperatorSeries& f, const OperatorSeries& g);
  friend OperatorSeries operator-(const OperatorSeries& f, const OperatorSeries& g);
  /// Cauchy product truncated at min(order).
  friend OperatorSeries operator*(const OperatorSeries& f, const OperatorSeries& g);
  OperatorSeries scaled(const RationalFunction& s) const;
  friend bool operator==(const OperatorSeries& f, const OperatorSeries& g) { return f.a_ == g.a_; }

  /// Throws std::domain_error("non-invertible series") when a_0 = 0.
  OperatorSeries inverse() const;
  /// Negative exponents require an invertible series.
  OperatorSeries pow(long e) const;
  /// Pincherle derivative as the formal derivative sum k a_k D^{k-1};
  /// the result has order order() - 1.
  OperatorSeries pincherle() const;

  /// Action on a polynomial; throws std::out_of_range("truncation exceeded")
  /// when deg p > order().
  Poly apply(const PsiSequence& psi, const Poly& p) const;

 private:
  std::vector<RationalFunction> a_;
};

/// An OperatorSeries with a_0 = 0 and a_1 != 0.
class DeltaOperator {
 public:
  /// Throws std::invalid_argument unless the series is a delta series.
  explicit DeltaOperator(OperatorSeries series);

  const OperatorSeries& series() const { return s_; }
  std::size_t order() const { return s_.order(); }
  Poly apply(const PsiSequence& psi, const Poly& p) const { return s_.apply(psi, p); }

 private:
  OperatorSeries s_;
};

/// The unique invertible S with Q = D S; S has order Q.order() - 1.
OperatorSeries s_factor(const DeltaOperator& q);

/// Generalized translation E^a(D) = sum_k a^k D^k / k_psi!.
OperatorSeries translation_series(const PsiSequence& psi, const RationalFunction& a, std::size_t order);
/// exp_psi{D^2} = sum_k D^{2k} / k_psi!.
OperatorSeries exp_psi_square(const PsiSequence& psi, std::size_t order);
/// (1 - D)^{alpha+1} with ordinary generalized binomial coefficients.
OperatorSeries laguerre_order_S(const BigRational& alpha, std::size_t order);

namespace delta {

/// Q = D
DeltaOperator partial(std::size_t order);
/// Q = D/(D - 1) = -(D + D^2 + ...)
DeltaOperator laguerre(std::size_t order);
/// Q = D(1 + D)
DeltaOperator partial_plus_square(std::size_t order);
/// Q = D E^a(D)
DeltaOperator abel(const PsiSequence& psi, const RationalFunction& a, std::size_t order);

}  // namespace delta

}  // namespace umbral
