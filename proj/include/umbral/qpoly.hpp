#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace umbral {

using BigRational = mpq_class;

std::string to_string(const BigRational& r);

/// Dense polynomial in the deformation parameter q with rational coefficients.
///
/// Coefficients are stored in ascending powers of q with trailing zeros
/// trimmed, so the zero polynomial has an empty coefficient vector and
/// degree -1.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(BigRational c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigRational> coeffs);

  static QPoly q();
  static QPoly monomial(BigRational c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(std::size_t k) const;
  const BigRational& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const BigRational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigRational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws std::domain_error("zero divisor") on b == 0.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend QPoly gcd(QPoly a, QPoly b);

  QPoly monic() const;
  BigRational eval(const BigRational& at) const;

  /// Ascending-power rendering, e.g. "1+q+q^2" or "-1/2+3*q".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

}  // namespace umbral
