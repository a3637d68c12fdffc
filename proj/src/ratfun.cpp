#include "umbral/ratfun.hpp"

#include <cctype>
#include <stdexcept>

namespace umbral {

namespace {

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  if (b.is_one()) return a;
  return QPoly::divmod(a, b).first;
}

// gcd with a shortcut for the constant cases that dominate q-free sequences.
QPoly fast_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(1);
  return gcd(a, b);
}

}  // namespace

RationalFunction::RationalFunction(QPoly num, QPoly den) : RationalFunction(make(std::move(num), std::move(den))) {}

RationalFunction RationalFunction::make(QPoly num, QPoly den) {
  if (den.is_zero()) throw std::domain_error("zero divisor");
  if (num.is_zero()) return {};
  QPoly g = fast_gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  if (den.leading() != 1) {
    const BigRational s = BigRational(1) / den.leading();
    num *= s;
    den *= s;
  }
  return {std::move(num), std::move(den), Canonical{}};
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  return make(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1);
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalFunction::make(a.num_ + b.num_, a.den_);
  const QPoly g = fast_gcd(a.den_, b.den_);
  if (g.is_one()) return RationalFunction::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const QPoly bd = exact_quotient(b.den_, g);
  const QPoly num = a.num_ * bd + b.num_ * exact_quotient(a.den_, g);
  if (num.is_zero()) return {};
  // any common factor of num and the new denominator divides g
  const QPoly h = fast_gcd(num, g);
  return {exact_quotient(num, h), exact_quotient(a.den_, h) * bd, RationalFunction::Canonical{}};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel; both inputs are reduced so the product needs no further gcd.
  const QPoly g1 = fast_gcd(a.num_, b.den_);
  const QPoly g2 = fast_gcd(b.num_, a.den_);
  QPoly num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  QPoly den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  return {std::move(num), std::move(den), RationalFunction::Canonical{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

BigRational RationalFunction::eval(const BigRational& at) const {
  const BigRational d = den_.eval(at);
  if (d == 0) throw std::domain_error("pole at evaluation point");
  return num_.eval(at) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("cannot parse rational function '") + std::string(s_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("zero divisor");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (neg && base.is_zero()) fail("zero divisor");
    return base.pow(neg ? -e : e);
  }

  RationalFunction primary() {
    skip();
    if (eat('(')) {
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (eat('q')) return RationalFunction::q();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, 'q' or '('");
    return RationalFunction(BigRational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

}  // namespace umbral
