#pragma once

#include <string>
#include <string_view>

#include "umbral/qpoly.hpp"

namespace umbral {

/// Exact element of Q(q): a reduced quotient num/den with den monic.
///
/// Every constructor and arithmetic operator returns the canonical form, so
/// equality is coefficient-wise comparison of numerator and denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(BigRational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RationalFunction(QPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  /// Throws std::domain_error("zero divisor") when den is zero.
  RationalFunction(QPoly num, QPoly den);

  static RationalFunction q() { return RationalFunction(QPoly::q()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at a rational point; throws std::domain_error when den vanishes there.
  BigRational eval(const BigRational& at) const;

  /// "1+q+q^2" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction make(QPoly num, QPoly den);

  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }
inline std::string to_string(const RationalFunction& r) { return r.to_string(); }

/// Parses expressions over integers, rationals and the symbol q with + - * / ^
/// and parentheses. Accepts every string produced by to_string.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace umbral
