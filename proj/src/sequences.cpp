#include "umbral/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

namespace {

Poly monomial(std::size_t k) { return Poly::monomial(RationalFunction(1), k); }

void require_order(const DeltaOperator& q, std::size_t needed) {
  if (q.order() < needed)
    throw std::out_of_range("truncation exceeded: delta operator of order " + std::to_string(q.order()) +
                            " needs order >= " + std::to_string(needed));
}

std::vector<Poly> solve_basic(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top) {
  require_order(q, n_top);
  const auto& a = q.series().coeffs();
  std::vector<Poly> polys{Poly(1L)};
  for (std::size_t n = 1; n <= n_top; ++n) {
    const Poly target = polys[n - 1].scaled(psi.number(n));
    std::vector<RationalFunction> c(n + 1);
    // Coefficient of x^m in Q p_n is sum_{j>m} c_j a_{j-m} j_psi!/m_psi!.
    for (std::size_t m = n; m-- > 0;) {
      RationalFunction rhs = target.coeff(m);
      for (std::size_t j = m + 2; j <= n; ++j)
        if (!c[j].is_zero() && !a[j - m].is_zero()) rhs -= c[j] * a[j - m] * psi.falling(j, j - m);
      c[m + 1] = rhs / (a[1] * psi.number(m + 1));
    }
    Poly p(std::move(c));
    if (!(q.apply(psi, p) == target)) throw std::logic_error("inconsistent triangular system");
    polys.push_back(std::move(p));
  }
  return polys;
}

Poly scale_by_ratio(const Poly& p, const PsiSequence& psi, std::size_t n) {
  return p.scaled(psi.number(n) / RationalFunction(static_cast<long>(n)));
}

std::vector<Poly> formula_basic(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top,
                                BasicMethod method) {
  require_order(q, n_top + 1);
  const OperatorSeries s = s_factor(q);
  const OperatorSeries dq = q.series().pincherle();
  const OperatorSeries s_inv = s.inverse();
  std::optional<OperatorSeries> dq_inv;
  if (method == BasicMethod::rodrigues4) dq_inv = dq.inverse();
  std::vector<Poly> polys{Poly(1L)};
  OperatorSeries s_inv_pow = OperatorSeries::identity(s.order());  // S^{-n}
  for (std::size_t n = 1; n <= n_top; ++n) {
    s_inv_pow = s_inv_pow * s_inv;
    Poly p;
    switch (method) {
      case BasicMethod::lagrange1:
        p = dq.apply(psi, (s_inv_pow * s_inv).apply(psi, monomial(n)));
        break;
      case BasicMethod::lagrange2:
        p = s_inv_pow.apply(psi, monomial(n)) -
            scale_by_ratio(s_inv_pow.pincherle().apply(psi, monomial(n - 1)), psi, n);
        break;
      case BasicMethod::rodrigues3:
        p = scale_by_ratio(apply_xhat_psi(psi, s_inv_pow.apply(psi, monomial(n - 1))), psi, n);
        break;
      case BasicMethod::rodrigues4:
        p = scale_by_ratio(apply_xhat_psi(psi, dq_inv->apply(psi, polys[n - 1])), psi, n);
        break;
      case BasicMethod::solve:
        throw std::logic_error("solve is not a transfer formula");
    }
    polys.push_back(std::move(p));
  }
  return polys;
}

}  // namespace

std::string_view to_string(BasicMethod m) {
  switch (m) {
    case BasicMethod::lagrange1: return "lagrange1";
    case BasicMethod::lagrange2: return "lagrange2";
    case BasicMethod::rodrigues3: return "rodrigues3";
    case BasicMethod::rodrigues4: return "rodrigues4";
    case BasicMethod::solve: return "solve";
  }
  return "?";
}

BasicMethod parse_basic_method(std::string_view s) {
  for (BasicMethod m : kAllBasicMethods)
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

BasicSequence basic_sequence(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top, BasicMethod method) {
  if (method == BasicMethod::solve) return {q, solve_basic(psi, q, n_top)};
  return {q, formula_basic(psi, q, n_top, method)};
}

ShefferSequence sheffer_sequence(const PsiSequence& psi, const DeltaOperator& q, const OperatorSeries& s,
                                 std::size_t n_top) {
  if (!s.is_invertible()) throw std::domain_error("non-invertible series");
  if (s.order() < n_top) throw std::out_of_range("truncation exceeded: S has order " + std::to_string(s.order()));
  const OperatorSeries s_inv = s.inverse();
  std::vector<Poly> polys;
  for (const Poly& p : solve_basic(psi, q, n_top)) polys.push_back(s_inv.apply(psi, p));
  return {q, s, std::move(polys)};
}

Poly laguerre_closed(const PsiSequence& psi, std::size_t n) {
  if (n == 0) return Poly(1L);
  std::vector<RationalFunction> c(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n - 1, k - 1);
    RationalFunction term = psi.factorial(n) / psi.factorial(k) * RationalFunction(BigRational(binom));
    c[k] = k % 2 == 0 ? term : -term;
  }
  return Poly(std::move(c));
}

Poly q_laguerre_closed(std::size_t n) {
  return laguerre_closed(PsiSequence::qgauss(std::max(n, PsiSequence::kDefaultMax)), n);
}

Poly laguerre_printed(const PsiSequence& psi, std::size_t n) {
  if (n == 0) return Poly(1L);
  const RationalFunction prefactor = psi.number(n) / RationalFunction(static_cast<long>(n));
  std::vector<RationalFunction> c(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalFunction term = prefactor * psi.factorial(n) / psi.factorial(k) * psi.binomial(n - 1, k - 1) *
                            RationalFunction(static_cast<long>(k)) / psi.number(k);
    c[k] = k % 2 == 0 ? term : -term;
  }
  return Poly(std::move(c));
}

std::vector<RationalFunction> basis_coordinates(const std::vector<Poly>& basis, const Poly& f) {
  if (f.degree() >= static_cast<int>(basis.size()))
    throw std::out_of_range("polynomial of degree " + std::to_string(f.degree()) + " outside basis range");
  std::vector<RationalFunction> coords(basis.size());
  Poly rest = f;
  for (std::size_t k = basis.size(); k-- > 0;) {
    const RationalFunction top = rest.coeff(k);
    if (top.is_zero()) continue;
    coords[k] = top / basis[k].coeff(k);
    rest -= basis[k].scaled(coords[k]);
  }
  return coords;
}

namespace {

// sum_k coords[k] p_{k+shift}
Poly combine(const std::vector<Poly>& basis, const std::vector<RationalFunction>& coords, std::size_t shift) {
  Poly out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    if (k + shift >= basis.size()) throw std::out_of_range("degree overflow");
    out += basis[k + shift].scaled(coords[k]);
  }
  return out;
}

}  // namespace

OperatorMatrix dual_xhat(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top) {
  if (n_top + 1 > psi.n_max() || q.order() < n_top + 1)
    throw std::out_of_range("degree overflow: dual operator on degree " + std::to_string(n_top) +
                            " needs truncation >= " + std::to_string(n_top + 1));
  const std::vector<Poly> p = solve_basic(psi, q, n_top + 1);
  const std::vector<Poly> lower(p.begin(), p.end() - 1);
  OperatorMatrix m(n_top + 2, n_top + 1);
  for (std::size_t j = 0; j <= n_top; ++j) m.set_column(j, combine(p, basis_coordinates(lower, monomial(j)), 1));
  return m;
}

OperatorExpansion expand_operator(const PsiSequence& psi, const OperatorMatrix& t, const DeltaOperator& q) {
  if (t.rows() != t.cols()) throw std::out_of_range("truncation exceeded: operator matrix must be square");
  const std::size_t n = t.cols() - 1;
  // Largest degree rise h; the expansion then lives on p_0 .. p_{n+h}.
  std::size_t rise = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    const int d = t.column(m).degree();
    if (d > static_cast<int>(m)) rise = std::max(rise, static_cast<std::size_t>(d) - m);
  }
  const std::size_t top = n + rise;
  if (top > psi.n_max()) throw std::out_of_range("truncation exceeded: expansion needs degree " + std::to_string(top));
  const std::vector<Poly> p = solve_basic(psi, q, top);

  std::vector<std::vector<RationalFunction>> qc(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<RationalFunction> tm = basis_coordinates(p, t.apply(p[m]));
    auto& cur = qc[m];
    cur.assign(m + rise + 1, RationalFunction());
    for (std::size_t i = 0; i <= m + rise; ++i) {
      RationalFunction acc = i < tm.size() ? tm[i] : RationalFunction();
      for (std::size_t k = 0; k < m; ++k) {
        // q_k(xhat_Q) Q^k p_m = m_psi!/(m-k)_psi! q_k(xhat_Q) p_{m-k}
        if (i + k < m) continue;
        const std::size_t j = i + k - m;
        if (j < qc[k].size() && !qc[k][j].is_zero()) acc -= psi.falling(m, k) * qc[k][j];
      }
      cur[i] = acc / psi.factorial(m);
    }
  }
  OperatorExpansion e;
  e.basis_degree = top;
  for (auto& c : qc) e.coeffs.emplace_back(std::move(c));
  return e;
}

OperatorMatrix reconstruct_operator(const PsiSequence& psi, const OperatorExpansion& e, const DeltaOperator& q,
                                    std::size_t max_degree) {
  const std::vector<Poly> p = solve_basic(psi, q, e.basis_degree);
  OperatorMatrix out(max_degree + 1, max_degree + 1);
  for (std::size_t m = 0; m <= max_degree; ++m) {
    Poly column;
    Poly qn_x = monomial(m);  // Q^n x^m
    for (std::size_t n = 0; n < e.coeffs.size() && !qn_x.is_zero_poly(); ++n) {
      const auto coords = basis_coordinates(p, qn_x);
      const auto qn = e.coeffs[n].coeffs();
      for (std::size_t j = 0; j < qn.size(); ++j)
        if (!qn[j].is_zero()) column += combine(p, coords, j).scaled(qn[j]);
      qn_x = q.apply(psi, qn_x);
    }
    if (column.degree() > static_cast<int>(max_degree)) throw std::logic_error("reconstruction leaves degree range");
    out.set_column(m, column);
  }
  return out;
}

bool MutatorReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Poly& r) { return r.is_zero_poly(); });
}

MutatorReport qmutator_check(const PsiSequence& psi, const DeltaOperator& q, std::size_t n_top) {
  const std::vector<Poly> p = solve_basic(psi, q, n_top);
  auto dual = [&](const Poly& f) { return combine(p, basis_coordinates(p, f), 1); };
  MutatorReport report;
  for (std::size_t n = 0; n < n_top; ++n) {
    const Poly forward = q.apply(psi, dual(p[n]));
    auto coords = basis_coordinates(p, dual(q.apply(psi, p[n])));
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k].is_zero()) continue;
      coords[k] *= psi.mutator_eigenvalue(k);
    }
    report.residuals.push_back(forward - combine(p, coords, 0) - p[n]);
  }
  return report;
}

bool BinomialReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const BiPoly& r) { return r.is_zero_poly(); });
}

namespace {

BinomialReport binomial_residuals(const PsiSequence& psi, const std::vector<Poly>& s, const std::vector<Poly>& p) {
  BinomialReport report;
  for (std::size_t n = 0; n < s.size(); ++n) {
    BiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs += (embed_x(s[k]) * embed_y(p[n - k])).scaled(Poly(psi.binomial(n, k)));
    report.residuals.push_back(translation_apply(psi, s[n]) - rhs);
  }
  return report;
}

}  // namespace

BinomialReport sheffer_binomial_check(const PsiSequence& psi, const DeltaOperator& q, const OperatorSeries& s,
                                      std::size_t n_top) {
  const ShefferSequence sh = sheffer_sequence(psi, q, s, n_top);
  return binomial_residuals(psi, sh.polys, solve_basic(psi, q, n_top));
}

BinomialReport binomial_type_check(const PsiSequence& psi, const BasicSequence& basic) {
  return binomial_residuals(psi, basic.polys, basic.polys);
}

}  // namespace umbral
