#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "umbral/psi.hpp"

namespace umbral {

/// Eigenvalues b_0 .. b_N of Qhat (Qhat x^n = b_n x^n) that make
/// A = x and B = y Qhat satisfy BA - qhat_psi AB = 0.
///
/// b_0 = 1 and b_{n+1} = b_n ((n+2)_psi - 1)/(n+1)_psi; for qgauss b_n = q^n.
std::vector<RationalFunction> b_sequence(const PsiSequence& psi, std::size_t n_top);

/// Applies A (multiplication by x) to a bivariate polynomial.
BiPoly plane_apply_a(const BiPoly& f);
/// Applies B = y Qhat; throws std::out_of_range if b is too short.
BiPoly plane_apply_b(const std::vector<RationalFunction>& b, const BiPoly& f);

/// Residuals (BA - qhat_psi AB) x^n for n = 0 .. N-1.
struct CommutationReport {
  std::vector<BiPoly> residuals;
  bool pass() const;
};
CommutationReport commutation_check(const PsiSequence& psi, std::size_t n_top);

/// (A+B)^n 1 against sum_k C(n,k)_psi A^k B^{n-k} 1.
struct NoGoResult {
  BiPoly lhs;
  BiPoly rhs;
  BiPoly residual;
  bool holds() const { return residual.is_zero_poly(); }
};
NoGoResult binomial_nogo(const PsiSequence& psi, std::size_t n);

/// Smallest n in 0..n_limit with a nonzero residual.
std::optional<std::size_t> first_nogo_witness(const PsiSequence& psi, std::size_t n_limit);

}  // namespace umbral
