#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/opmatrix.hpp"

namespace umbral {

/// How a basic sequence is constructed. The first four are the psi-Lagrange
/// and psi-Rodrigues transfer formulas; `solve` is an independent
/// degree-by-degree triangular solve of Q p_n = n_psi p_{n-1}.
enum class BasicMethod { lagrange1, lagrange2, rodrigues3, rodrigues4, solve };

inline constexpr BasicMethod kAllBasicMethods[] = {BasicMethod::lagrange1, BasicMethod::lagrange2,
                                                   BasicMethod::rodrigues3, BasicMethod::rodrigues4,
                                                   BasicMethod::solve};

std::string_view to_string(BasicMethod m);
BasicMethod parse_basic_method(std::string_view s);

/// p_0 ... p_N with p_0 = 1, p_n(0) = 0 and Q p_n = n_psi p_{n-1}.
struct BasicSequence {
  DeltaOperator delta;
  std::vector<Poly> polys;
};

/// s_n = S^{-1} p_n.
struct ShefferSequence {
  DeltaOperator delta;
  OperatorSeries s;
  std::vector<Poly> polys;
};

/// Throws std::out_of_range("truncation exceeded") unless Q.order() > n_top
/// for the formula methods (the Pincherle derivative loses one order) and
/// Q.order() >= n_top for `solve`.
BasicSequence basic_sequence(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top,
                             BasicMethod method = BasicMethod::solve);

ShefferSequence sheffer_sequence(const PsiSequence& psi, const DeltaOperator& q, const OperatorSeries& s,
                                 std::size_t n_top);

/// Closed form of the basic sequence of D/(D-1):
/// L_n = sum_{k=1}^n (-1)^k (n_psi!/k_psi!) C(n-1, k-1) x^k, with L_0 = 1.
Poly laguerre_closed(const PsiSequence& psi, std::size_t n);
/// laguerre_closed with psi = qgauss.
Poly q_laguerre_closed(std::size_t n);
/// The closed form as it is usually printed, carrying a deformed binomial
/// C(n-1,k-1)_psi and the extra factors (n_psi/n)(k/k_psi). Kept for
/// comparison only: it disagrees with the basic sequence from n = 2 on
/// unless psi is classic.
Poly laguerre_printed(const PsiSequence& psi, std::size_t n);

/// Coordinates of f in a basis with deg basis[k] = k.
std::vector<RationalFunction> basis_coordinates(const std::vector<Poly>& basis, const Poly& f);

/// Matrix of the dual operator p_n -> p_{n+1} from degrees 0..n_top into
/// 0..n_top+1. Throws std::out_of_range("degree overflow") when
/// n_top + 1 exceeds psi's truncation.
OperatorMatrix dual_xhat(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top);

/// Expansion T = sum_n q_n(xhat_Q) Q^n valid on degrees 0..N where
/// T is (N+1)x(N+1). coeffs[n] is q_n as a polynomial in the dual operator.
struct OperatorExpansion {
  std::vector<Poly> coeffs;
  /// Highest basic-sequence index the expansion touches.
  std::size_t basis_degree = 0;
};

OperatorExpansion expand_operator(const PsiSequence& psi, const OperatorMatrix& t, const DeltaOperator& q);
/// Rebuilds the (N+1)x(N+1) matrix of sum_n q_n(xhat_Q) Q^n.
OperatorMatrix reconstruct_operator(const PsiSequence& psi, const OperatorExpansion& e, const DeltaOperator& q,
                                    std::size_t max_degree);

/// Residuals Q xhat_Q p_n - qhat xhat_Q Q p_n - p_n for n = 0 .. N-1.
struct MutatorReport {
  std::vector<Poly> residuals;
  bool pass() const;
};
MutatorReport qmutator_check(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top);

/// Residuals E^y(D) s_n - sum_k C(n,k)_psi s_k(x) p_{n-k}(y), n = 0..N.
struct BinomialReport {
  std::vector<BiPoly> residuals;
  bool pass() const;
};
BinomialReport sheffer_binomial_check(const PsiSequence& psi, const DeltaOperator& q, const OperatorSeries& s,
                                      std::size_t n_top);
/// The basic-sequence case (S = 1).
BinomialReport binomial_type_check(const PsiSequence& psi, const BasicSequence& basic);

}  // namespace umbral
