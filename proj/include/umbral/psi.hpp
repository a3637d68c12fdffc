#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/poly.hpp"

namespace umbral {

/// A sequence psi_0 = 1, psi_1, ..., psi_{N_max} of nonzero elements of Q(q).
///
/// The deformed numbers n_psi = psi_{n-1}/psi_n, factorials n_psi! = 1/psi_n
/// and the values themselves are computed once at construction; the object
/// is immutable afterwards.
class PsiSequence {
 public:
  static constexpr std::size_t kDefaultMax = 16;

  /// psi_n = 1/n!
  static PsiSequence classic(std::size_t n_max = kDefaultMax);
  /// psi_n = 1/n_q! with n_q = 1 + q + ... + q^{n-1}
  static PsiSequence qgauss(std::size_t n_max = kDefaultMax);
  /// psi_n = 1/(F_1 F_2 ... F_n), F = 1, 1, 2, 3, 5, ...
  static PsiSequence fibonacci(std::size_t n_max = kDefaultMax);
  /// psi_n = 1/(n!)^2
  static PsiSequence square(std::size_t n_max = kDefaultMax);
  /// User table psi_0 ... psi_{N_max}; throws std::invalid_argument unless
  /// psi_0 = 1 and every entry is nonzero.
  static PsiSequence custom(std::string name, std::vector<RationalFunction> values);
  /// One of "classic", "qgauss", "fibonacci", "square".
  static PsiSequence builtin(std::string_view name, std::size_t n_max = kDefaultMax);
  static const std::vector<std::string>& builtin_names();

  const std::string& name() const { return name_; }
  std::size_t n_max() const { return values_.size() - 1; }

  const RationalFunction& value(std::size_t n) const;
  /// n_psi; zero for n = 0.
  const RationalFunction& number(std::size_t n) const;
  /// n_psi! = 1/psi_n
  const RationalFunction& factorial(std::size_t n) const;
  /// n_psi (n-1)_psi ... (n-k+1)_psi
  RationalFunction falling(std::size_t n, std::size_t k) const;
  /// n_psi! / (k_psi! (n-k)_psi!); throws std::out_of_range unless k <= n.
  RationalFunction binomial(std::size_t n, std::size_t k) const;
  /// ((n+1)_psi - 1) / n_psi, the eigenvalue of the psi-mutator operator; n >= 1.
  RationalFunction mutator_eigenvalue(std::size_t n) const;

 private:
  PsiSequence(std::string name, std::vector<RationalFunction> values);
  void check_index(std::size_t n) const;

  std::string name_;
  std::vector<RationalFunction> values_;
  std::vector<RationalFunction> numbers_;
  std::vector<RationalFunction> factorials_;
};

/// Gaussian q-number 1 + q + ... + q^{n-1}.
RationalFunction gauss_number(std::size_t n);

RationalFunction psi_number(const PsiSequence& psi, std::size_t n);
RationalFunction psi_binomial(const PsiSequence& psi, std::size_t n, std::size_t k);

/// d_psi x^n = n_psi x^{n-1}, extended linearly.
Poly apply_partial_psi(const PsiSequence& psi, const Poly& p);

/// (p(x) - p(qx)) / ((1-q) x), computed literally.
Poly jackson_quotient(const Poly& p);

/// xhat_psi x^n = (n+1)/(n+1)_psi x^{n+1}; throws std::out_of_range when the
/// result would exceed degree N_max.
Poly apply_xhat_psi(const PsiSequence& psi, const Poly& p);

/// E^y(d_psi) p = sum_k y^k d_psi^k p / k_psi!
BiPoly translation_apply(const PsiSequence& psi, const Poly& p);

}  // namespace umbral
