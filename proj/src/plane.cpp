#include "umbral/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

std::vector<RationalFunction> b_sequence(const PsiSequence& psi, std::size_t n_top) {
  std::vector<RationalFunction> b{RationalFunction(1)};
  for (std::size_t k = 1; k <= n_top; ++k) b.push_back(b.back() * psi.mutator_eigenvalue(k));
  return b;
}

BiPoly plane_apply_a(const BiPoly& f) { return f.shifted(1); }

BiPoly plane_apply_b(const std::vector<RationalFunction>& b, const BiPoly& f) {
  const auto rows = f.coeffs();
  if (rows.size() > b.size()) throw std::out_of_range("b sequence shorter than x-degree");
  std::vector<Poly> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].shifted(1).scaled(b[i]);
  return BiPoly(std::move(out));
}

bool CommutationReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const BiPoly& r) { return r.is_zero_poly(); });
}

CommutationReport commutation_check(const PsiSequence& psi, std::size_t n_top) {
  const auto b = b_sequence(psi, n_top);
  CommutationReport report;
  for (std::size_t n = 0; n < n_top; ++n) {
    const BiPoly xn = embed_x(Poly::monomial(RationalFunction(1), n));
    const BiPoly ba = plane_apply_b(b, plane_apply_a(xn));
    BiPoly ab = plane_apply_a(plane_apply_b(b, xn));
    // qhat_psi acts on the x-degree; AB x^n has x-degree n+1.
    ab = ab.scaled(Poly(psi.mutator_eigenvalue(n + 1)));
    report.residuals.push_back(ba - ab);
  }
  return report;
}

NoGoResult binomial_nogo(const PsiSequence& psi, std::size_t n) {
  // B only ever meets x-degrees below n.
  const auto b = b_sequence(psi, n == 0 ? 0 : n - 1);
  const BiPoly one(Poly(1L));
  BiPoly lhs = one;
  for (std::size_t i = 0; i < n; ++i) lhs = plane_apply_a(lhs) + plane_apply_b(b, lhs);
  BiPoly rhs;
  for (std::size_t k = 0; k <= n; ++k) {
    BiPoly term = one;
    for (std::size_t i = 0; i < n - k; ++i) term = plane_apply_b(b, term);
    for (std::size_t i = 0; i < k; ++i) term = plane_apply_a(term);
    rhs += term.scaled(Poly(psi.binomial(n, k)));
  }
  BiPoly residual = lhs - rhs;
  return {std::move(lhs), std::move(rhs), std::move(residual)};
}

std::optional<std::size_t> first_nogo_witness(const PsiSequence& psi, std::size_t n_limit) {
  for (std::size_t n = 0; n <= n_limit; ++n)
    if (!binomial_nogo(psi, n).holds()) return n;
  return std::nullopt;
}

}  // namespace umbral
