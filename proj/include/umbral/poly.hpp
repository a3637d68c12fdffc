#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umbral/ratfun.hpp"

namespace umbral {

/// Dense univariate polynomial over an exact scalar ring.
///
/// Scalar must be default-constructible to zero, constructible from long,
/// closed under + - *, and provide a free is_zero(). Trailing zero
/// coefficients are always trimmed; the zero polynomial has degree -1.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Polynomial(long c) : Polynomial(Scalar(c)) {}
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Scalar c, std::size_t k) {
    if (is_zero(c)) return {};
    std::vector<Scalar> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Scalar(1L), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  friend bool is_zero(const Polynomial& p) { return p.c_.empty(); }

  std::span<const Scalar> coeffs() const { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_zero(b.c_[j])) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r));
  }

  Polynomial scaled(const Scalar& s) const {
    if (is_zero(s)) return {};
    Polynomial r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  /// Multiplication by x^k.
  Polynomial shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<Scalar> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Scalar eval(const Scalar& at) const {
    Scalar acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
    return acc;
  }

  /// p(inner(x)) by Horner's rule.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * inner + Polynomial(c_[k]);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return Polynomial(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Polynomial in x over Q(q).
using Poly = Polynomial<RationalFunction>;

/// Polynomial in x whose coefficients are polynomials in a central symbol y.
using BiPoly = Polynomial<Poly>;

/// Embeds p(x) as a bivariate polynomial constant in y.
BiPoly embed_x(const Poly& p);
/// Embeds p as a polynomial in y (x-degree zero).
BiPoly embed_y(const Poly& p);
/// Coefficient of x^i y^j.
RationalFunction coeff_xy(const BiPoly& p, std::size_t i, std::size_t j);
/// Sets y = 0.
Poly at_y_zero(const BiPoly& p);

/// Exact coefficient strings, ascending powers of x.
std::vector<std::string> coefficient_strings(const Poly& p);
/// Table of coefficient strings: rows indexed by x-degree, columns by y-degree.
std::vector<std::vector<std::string>> coefficient_table(const BiPoly& p);

/// Human-readable rendering such as "(1+q)*x^2 - x".
std::string to_string(const Poly& p, char var = 'x');

}  // namespace umbral
