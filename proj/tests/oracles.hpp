#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// the tests check: q-binomials come from the q-Pascal rule, classical
// sequences from their textbook closed forms.

#include <random>
#include <vector>

#include "umbral/poly.hpp"

namespace oracle {

using umbral::BigRational;
using umbral::Poly;
using umbral::QPoly;
using umbral::RationalFunction;

inline RationalFunction q() { return RationalFunction::q(); }

inline RationalFunction rf(long v) { return RationalFunction(v); }

/// Gaussian binomial by C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
inline RationalFunction gaussian_binomial(std::size_t n, std::size_t k) {
  std::vector<std::vector<RationalFunction>> t(n + 1, std::vector<RationalFunction>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][0] = rf(1);
    for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + q().pow(static_cast<long>(j)) * t[i - 1][j];
  }
  return t[n][k];
}

inline RationalFunction ordinary_binomial(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return RationalFunction(BigRational(b));
}

inline Poly x() { return Poly::x(); }

inline Poly pow(const Poly& p, std::size_t e) {
  Poly r(1L);
  for (std::size_t i = 0; i < e; ++i) r = r * p;
  return r;
}

/// Abel polynomials x (x - n a)^{n-1}, basic for D e^{aD}.
inline Poly abel(std::size_t n, long a) {
  if (n == 0) return Poly(1L);
  return x() * pow(x() - Poly(rf(static_cast<long>(n) * a)), n - 1);
}

inline RationalFunction factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return RationalFunction(BigRational(f));
}

/// Classical basic sequence of D/(D-1): sum_k (-1)^k n!/k! C(n-1,k-1) x^k.
inline Poly classical_laguerre(std::size_t n) {
  if (n == 0) return Poly(1L);
  Poly out;
  for (std::size_t k = 1; k <= n; ++k) {
    RationalFunction c = factorial(n) / factorial(k) * ordinary_binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1);
    out += Poly::monomial(k % 2 ? -c : c, k);
  }
  return out;
}

/// Specializes every coefficient at q = value.
inline Poly specialize(const Poly& p, const BigRational& value) {
  std::vector<RationalFunction> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v.eval(value));
  return Poly(std::move(c));
}

/// Random element of Q(q) with small integer coefficients; nonzero denominator.
inline RationalFunction random_ratfun(std::mt19937& rng, int max_degree = 3, bool allow_zero = true) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, max_degree);
  auto rpoly = [&](bool nonzero) {
    for (;;) {
      std::vector<BigRational> c;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
      QPoly p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  for (;;) {
    RationalFunction r(rpoly(false), rpoly(true));
    if (allow_zero || !r.is_zero()) return r;
  }
}

inline Poly random_poly(std::mt19937& rng, int degree) {
  std::vector<RationalFunction> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_ratfun(rng, 2));
  return Poly(std::move(c));
}

}  // namespace oracle
