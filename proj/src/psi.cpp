#include "umbral/psi.hpp"

#include <stdexcept>

namespace umbral {

namespace {

template <class Factor>
std::vector<RationalFunction> reciprocal_products(std::size_t n_max, Factor factor) {
  std::vector<RationalFunction> v;
  v.reserve(n_max + 1);
  RationalFunction fact(1);
  v.push_back(fact);
  for (std::size_t n = 1; n <= n_max; ++n) {
    fact *= factor(n);
    v.push_back(fact.inverse());
  }
  return v;
}

}  // namespace

RationalFunction gauss_number(std::size_t n) {
  std::vector<BigRational> c(n, BigRational(1));
  return RationalFunction(QPoly(std::move(c)));
}

PsiSequence::PsiSequence(std::string name, std::vector<RationalFunction> values)
    : name_(std::move(name)), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("psi sequence needs at least psi_0");
  if (!values_[0].is_one()) throw std::invalid_argument("psi_0 must equal 1");
  for (std::size_t n = 0; n < values_.size(); ++n)
    if (values_[n].is_zero()) throw std::invalid_argument("psi_" + std::to_string(n) + " is zero");
  numbers_.reserve(values_.size());
  factorials_.reserve(values_.size());
  numbers_.emplace_back(0);
  for (std::size_t n = 1; n < values_.size(); ++n) numbers_.push_back(values_[n - 1] / values_[n]);
  for (const auto& v : values_) factorials_.push_back(v.inverse());
}

PsiSequence PsiSequence::classic(std::size_t n_max) {
  return {"classic", reciprocal_products(n_max, [](std::size_t n) { return RationalFunction(static_cast<long>(n)); })};
}

PsiSequence PsiSequence::qgauss(std::size_t n_max) {
  return {"qgauss", reciprocal_products(n_max, gauss_number)};
}

PsiSequence PsiSequence::fibonacci(std::size_t n_max) {
  std::vector<BigRational> fib{0, 1};
  while (fib.size() <= n_max) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  return {"fibonacci", reciprocal_products(n_max, [&](std::size_t n) { return RationalFunction(fib[n]); })};
}

PsiSequence PsiSequence::square(std::size_t n_max) {
  return {"square", reciprocal_products(n_max, [](std::size_t n) {
            const long v = static_cast<long>(n);
            return RationalFunction(v * v);
          })};
}

PsiSequence PsiSequence::custom(std::string name, std::vector<RationalFunction> values) {
  return {std::move(name), std::move(values)};
}

const std::vector<std::string>& PsiSequence::builtin_names() {
  static const std::vector<std::string> names{"classic", "qgauss", "fibonacci", "square"};
  return names;
}

PsiSequence PsiSequence::builtin(std::string_view name, std::size_t n_max) {
  if (name == "classic") return classic(n_max);
  if (name == "qgauss") return qgauss(n_max);
  if (name == "fibonacci") return fibonacci(n_max);
  if (name == "square") return square(n_max);
  throw std::invalid_argument("unknown psi sequence '" + std::string(name) +
                              "'; built-ins: classic, qgauss, fibonacci, square");
}

void PsiSequence::check_index(std::size_t n) const {
  if (n > n_max())
    throw std::out_of_range("beyond truncation: index " + std::to_string(n) + " > N_max " + std::to_string(n_max()));
}

const RationalFunction& PsiSequence::value(std::size_t n) const {
  check_index(n);
  return values_[n];
}

const RationalFunction& PsiSequence::number(std::size_t n) const {
  check_index(n);
  return numbers_[n];
}

const RationalFunction& PsiSequence::factorial(std::size_t n) const {
  check_index(n);
  return factorials_[n];
}

RationalFunction PsiSequence::falling(std::size_t n, std::size_t k) const {
  check_index(n);
  if (k > n) return {};
  return factorials_[n] * values_[n - k];
}

RationalFunction PsiSequence::binomial(std::size_t n, std::size_t k) const {
  check_index(n);
  if (k > n) throw std::out_of_range("binomial index k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  return factorials_[n] * values_[k] * values_[n - k];
}

RationalFunction PsiSequence::mutator_eigenvalue(std::size_t n) const {
  if (n == 0) throw std::domain_error("mutator eigenvalue undefined at n = 0");
  return (number(n + 1) - RationalFunction(1)) / number(n);
}

RationalFunction psi_number(const PsiSequence& psi, std::size_t n) { return psi.number(n); }

RationalFunction psi_binomial(const PsiSequence& psi, std::size_t n, std::size_t k) { return psi.binomial(n, k); }

Poly apply_partial_psi(const PsiSequence& psi, const Poly& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<RationalFunction> out(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) out[n - 1] = c[n] * psi.number(n);
  return Poly(std::move(out));
}

Poly jackson_quotient(const Poly& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  const RationalFunction q = RationalFunction::q();
  const RationalFunction one_minus_q = RationalFunction(1) - q;
  // numerator p(x) - p(qx), coefficientwise c_k (1 - q^k)
  std::vector<RationalFunction> diff(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) diff[k] = c[k] - c[k] * q.pow(static_cast<long>(k));
  if (!diff[0].is_zero()) throw std::logic_error("difference quotient does not vanish at x = 0");
  std::vector<RationalFunction> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = diff[k] / one_minus_q;
  return Poly(std::move(out));
}

Poly apply_xhat_psi(const PsiSequence& psi, const Poly& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  if (c.size() > psi.n_max())
    throw std::out_of_range("beyond truncation: xhat_psi would produce degree " + std::to_string(c.size()) +
                            " > N_max " + std::to_string(psi.n_max()));
  std::vector<RationalFunction> out(c.size() + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    out[n + 1] = c[n] * RationalFunction(static_cast<long>(n + 1)) / psi.number(n + 1);
  }
  return Poly(std::move(out));
}

BiPoly translation_apply(const PsiSequence& psi, const Poly& p) {
  std::vector<Poly> rows(p.coeffs().size());
  Poly term = p;
  for (std::size_t k = 0; !term.is_zero_poly(); ++k) {
    const RationalFunction w = psi.value(k);  // 1/k_psi!
    const auto c = term.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) rows[i] += Poly::monomial(c[i] * w, k);
    term = apply_partial_psi(psi, term);
  }
  return BiPoly(std::move(rows));
}

}  // namespace umbral
