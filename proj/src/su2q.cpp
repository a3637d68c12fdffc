#include "umbral/su2q.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace umbral {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_q(std::optional<Complex> q) {
  if (!q) return "undeformed";
  return format_double(q->real()) + "," + format_double(q->imag());
}

Complex bracket(double x, std::optional<Complex> q) { return q ? q_bracket(x, *q) : Complex(x, 0.0); }

// exp(2 pi i k / n) with k reduced mod n first.
Complex root_of_unity(long k, std::size_t n) {
  const long nn = static_cast<long>(n);
  const long r = ((k % nn) + nn) % nn;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

Complex q_bracket(double x, Complex q) {
  if (q == Complex(0.0, 0.0) || q == Complex(1.0, 0.0) || q == Complex(-1.0, 0.0))
    throw std::domain_error("degenerate deformation");
  const Complex lq = std::log(q);
  return (std::exp(x * lq) - std::exp(-x * lq)) / (q - 1.0 / q);
}

Spin Spin::from_twice(int twice_j) {
  if (twice_j < 1) throw std::invalid_argument("spin j must be a positive half-integer");
  return Spin(twice_j);
}

Spin Spin::parse(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const int num = std::stoi(text.substr(0, slash), &used);
      if (used != slash || text.substr(slash + 1) != "2") throw std::invalid_argument("");
      return from_twice(num);
    }
    const double v = std::stod(text, &used);
    if (used != text.size() || std::abs(2.0 * v - std::round(2.0 * v)) > 1e-12) throw std::invalid_argument("");
    return from_twice(static_cast<int>(std::lround(2.0 * v)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("invalid spin '" + text + "': expected a positive half-integer such as 1/2 or 3");
  }
}

std::string Spin::to_string() const {
  return twice_ % 2 == 0 ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
}

SpinRep su2_build(Spin j, std::optional<Complex> q) {
  const std::size_t n = j.dim();
  const double jv = j.value();
  ComplexMatrix j3(n), jp(n), jm(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double m = jv - static_cast<double>(r);
    j3(r, r) = m;
    // J+ |m> = sqrt([j-m][j+m+1]) |m+1>, row r-1
    if (r >= 1) jp(r - 1, r) = std::sqrt(bracket(jv - m, q) * bracket(jv + m + 1, q));
    // J- |m> = sqrt([j+m][j-m+1]) |m-1>, row r+1
    if (r + 1 < n) jm(r + 1, r) = std::sqrt(bracket(jv + m, q) * bracket(jv - m + 1, q));
  }
  return {j, q, std::move(j3), std::move(jp), std::move(jm)};
}

ComplexMatrix diagonal_bracket(const ComplexMatrix& d, std::optional<Complex> q) {
  if (!d.is_diagonal()) throw std::domain_error("not diagonal");
  ComplexMatrix r(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) r(i, i) = bracket(d(i, i).real(), q);
  return r;
}

double Su2Residuals::max() const { return std::max({j3_jplus, j3_jminus, jplus_jminus}); }

Su2Residuals su2_commutator_check(const SpinRep& rep) {
  Su2Residuals r;
  r.j3_jplus = (commutator(rep.j3, rep.jplus) - rep.jplus).inf_norm();
  r.j3_jminus = (commutator(rep.j3, rep.jminus) + rep.jminus).inf_norm();
  r.jplus_jminus =
      (commutator(rep.jplus, rep.jminus) - diagonal_bracket(Complex(2.0) * rep.j3, rep.q)).inf_norm();
  return r;
}

CheckReport su2_report(const SpinRep& rep, double tolerance) {
  const Su2Residuals r = su2_commutator_check(rep);
  CheckReport out;
  out.check = "su2_commutators";
  out.params = {{"j", rep.j.to_string()}, {"q", format_q(rep.q)}, {"tolerance", format_double(tolerance)}};
  out.residuals = {{"[J3,J+]-J+", r.j3_jplus}, {"[J3,J-]+J-", r.j3_jminus}, {"[J+,J-]-[2J3]_q", r.jplus_jminus}};
  out.convention = {{"basis", "m = j, j-1, ..., -j (row 0 is m = j)"},
                    {"bracket", rep.q ? "symmetric [x]_q = (q^x - q^-x)/(q - q^-1)" : "undeformed [x] = x"}};
  out.pass = r.max() <= tolerance;
  return out;
}

ComplexMatrix cyclic_shift(std::size_t n) {
  ComplexMatrix s(n);
  for (std::size_t r = 0; r < n; ++r) s(r, (r + 1) % n) = 1.0;
  return s;
}

double PolarDecomposition::max() const { return std::max({jplus_left, jplus_right, jminus_left, jminus_right}); }

PolarDecomposition polar_decompose(const SpinRep& rep) {
  if (rep.q) {
    for (int k = 1; k <= rep.j.twice(); ++k) {
      const Complex b = q_bracket(k, *rep.q);
      const double tol = 1e-12 * std::max(1.0, std::abs(b));
      if (std::abs(b) < tol)
        throw std::domain_error("degenerate representation: a bracket vanishes at this root of unity");
      if (std::abs(b.imag()) > tol || b.real() < 0.0) throw std::domain_error("modulus not PSD for this q");
    }
  }
  const ComplexMatrix pm = rep.jplus * rep.jminus;
  const ComplexMatrix mp = rep.jminus * rep.jplus;
  auto nonnegative_sqrt = [](const ComplexMatrix& d) {
    if (!d.is_diagonal()) throw std::domain_error("not diagonal");
    ComplexMatrix r(d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) {
      const Complex v = d(i, i);
      const double tol = 1e-12 * std::max(1.0, std::abs(v));
      if (std::abs(v.imag()) > tol || v.real() < -tol) throw std::domain_error("modulus not PSD for this q");
      r(i, i) = std::sqrt(std::max(v.real(), 0.0));
    }
    return r;
  };
  const ComplexMatrix m = nonnegative_sqrt(pm);
  const ComplexMatrix n = nonnegative_sqrt(mp);

  auto evaluate = [&](const ComplexMatrix& u, bool adjoint) {
    const ComplexMatrix u_inv = u.adjoint();
    PolarDecomposition pd{m, n, u, adjoint};
    pd.jplus_left = (rep.jplus - m * u_inv).inf_norm();
    pd.jplus_right = (rep.jplus - u_inv * n).inf_norm();
    pd.jminus_left = (rep.jminus - u * m).inf_norm();
    pd.jminus_right = (rep.jminus - n * u).inf_norm();
    pd.jminus_swapped_left = (rep.jminus - m * u).inf_norm();
    pd.jminus_swapped_right = (rep.jminus - u * n).inf_norm();
    return pd;
  };
  const ComplexMatrix shift = cyclic_shift(rep.j.dim());
  PolarDecomposition a = evaluate(shift, false);
  PolarDecomposition b = evaluate(shift.adjoint(), true);
  return b.max() < a.max() ? b : a;
}

CheckReport polar_report(const SpinRep& rep, const PolarDecomposition& pd, double tolerance) {
  CheckReport out;
  out.check = "polar_decomposition";
  out.params = {{"j", rep.j.to_string()}, {"q", format_q(rep.q)}, {"tolerance", format_double(tolerance)}};
  out.residuals = {{"J+ - sqrt(J+J-) U^-1", pd.jplus_left},
                   {"J+ - U^-1 sqrt(J-J+)", pd.jplus_right},
                   {"J- - U sqrt(J+J-)", pd.jminus_left},
                   {"J- - sqrt(J-J+) U", pd.jminus_right},
                   {"info: J- - sqrt(J+J-) U", pd.jminus_swapped_left},
                   {"info: J- - U sqrt(J-J+)", pd.jminus_swapped_right}};
  out.convention = {
      {"basis", "m = j, j-1, ..., -j (row 0 is m = j)"},
      {"sigma1", "cyclic shift with ones at (r, r+1 mod n)"},
      {"U", pd.unitary_is_adjoint_shift ? "sigma1^dagger" : "sigma1"},
      {"J+", "sqrt(J+J-) U^-1 = U^-1 sqrt(J-J+)"},
      {"J-", "U sqrt(J+J-) = sqrt(J-J+) U (moduli order swapped relative to sqrt(J+J-) U = U sqrt(J-J+), "
             "which is reported as info and does not hold)"}};
  out.pass = pd.max() <= tolerance;
  return out;
}

WeylPair weyl_build(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Weyl pair needs n >= 2");
  const Complex omega = root_of_unity(1, n);
  ComplexMatrix clock(n), q(n), s(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    clock(k, k) = root_of_unity(static_cast<long>(k), n);
    q(k, k) = static_cast<double>(k);
    for (std::size_t l = 0; l < n; ++l) s(k, l) = norm * root_of_unity(static_cast<long>(k * l), n);
  }
  const ComplexMatrix sd = s.adjoint();
  ComplexMatrix p = sd * q * s;
  ComplexMatrix omega_p = sd * clock * s;
  return {n, omega, cyclic_shift(n), std::move(clock), std::move(q), std::move(s), std::move(p), std::move(omega_p)};
}

WeylCheck weyl_check(const WeylPair& w) {
  const std::size_t n = w.n;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  WeylCheck c;
  c.sigma1_power = (w.sigma1.power(static_cast<int>(n)) - id).inf_norm();
  c.sigma2_power = (w.sigma2.power(static_cast<int>(n)) - id).inf_norm();

  const ComplexMatrix s12 = w.sigma1 * w.sigma2;
  const ComplexMatrix s21 = w.sigma2 * w.sigma1;
  const double plus = (s12 - w.omega * s21).inf_norm();
  const double minus = (s12 - std::conj(w.omega) * s21).inf_norm();
  c.sign = plus <= minus ? 1 : -1;
  c.weyl_relation = std::min(plus, minus);
  const Complex phase = c.sign == 1 ? w.omega : std::conj(w.omega);
  c.group_commutator = (w.sigma1 * w.sigma2 * w.sigma1.adjoint() * w.sigma2.adjoint() - phase * id).inf_norm();

  c.s_unitary = (w.smat.adjoint() * w.smat - id).inf_norm();

  const double to_shift = (w.omega_p - w.sigma1).inf_norm();
  const double to_adjoint = (w.omega_p - w.sigma1.adjoint()).inf_norm();
  c.omega_p_is_adjoint = to_adjoint < to_shift;
  c.omega_p = std::min(to_shift, to_adjoint);

  const double half = (static_cast<double>(n) - 1.0) / 2.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      if (a == k) {
        c.p_diag = std::max(c.p_diag, std::abs(w.pmat(a, a) - half));
        c.p_printed_zero_diag = std::max(c.p_printed_zero_diag, std::abs(w.pmat(a, a)));
        continue;
      }
      const Complex closed = 1.0 / (root_of_unity(-(static_cast<long>(a) - static_cast<long>(k)), n) - 1.0);
      c.p_offdiag = std::max(c.p_offdiag, std::abs(w.pmat(a, k) - closed));
    }

  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix shifted = root_of_unity(static_cast<long>(k), n) * id - w.sigma1;
    c.spectrum = std::max(c.spectrum, std::abs(shifted.determinant()));
  }
  return c;
}

CheckReport weyl_report(const WeylPair& w, const WeylCheck& c, double tolerance) {
  CheckReport out;
  out.check = "weyl_pair";
  out.params = {{"n", std::to_string(w.n)}, {"tolerance", format_double(tolerance)}};
  out.residuals = {{"sigma1^n - I", c.sigma1_power},
                   {"sigma2^n - I", c.sigma2_power},
                   {"sigma1 sigma2 - omega^s sigma2 sigma1", c.weyl_relation},
                   {"group commutator - omega^s I", c.group_commutator},
                   {"S^dagger S - I", c.s_unitary},
                   {"omega^P - target", c.omega_p},
                   {"P offdiag - closed form", c.p_offdiag},
                   {"P diag - (n-1)/2", c.p_diag},
                   {"info: P diag - printed 0", c.p_printed_zero_diag},
                   {"charpoly(sigma1) at omega^k", c.spectrum}};
  out.convention = {
      {"sigma1", "cyclic shift with ones at (r, r+1 mod n)"},
      {"sigma2", "diag(1, omega, ..., omega^(n-1)), omega = exp(2 pi i/n)"},
      {"Q", "diag(0, 1, ..., n-1)"},
      {"s", std::to_string(c.sign) + (w.n == 2 ? " (n = 2: omega = omega^-1, anticommuting)" : "")},
      {"omega^P", c.omega_p_is_adjoint ? "sigma1^dagger (computed as S^dagger U S)" : "sigma1 (computed as S^dagger U S)"},
      {"P diagonal", "(n-1)/2 = " + format_double((static_cast<double>(w.n) - 1.0) / 2.0) +
                         "; the printed zero diagonal deviates by the same amount"}};
  out.pass = c.sigma1_power <= tolerance && c.sigma2_power <= tolerance && c.weyl_relation <= tolerance &&
             c.group_commutator <= tolerance && c.s_unitary <= kUnitaryTolerance && c.omega_p <= kOmegaPTolerance &&
             c.p_offdiag <= tolerance && c.p_diag <= tolerance && c.spectrum <= kSpectrumTolerance;
  return out;
}

}  // namespace umbral
