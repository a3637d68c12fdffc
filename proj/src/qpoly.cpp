#include "umbral/qpoly.hpp"

#include <stdexcept>

namespace umbral {

std::string to_string(const BigRational& r) { return r.get_str(); }

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(BigRational c) {
  c.canonicalize();
  if (c != 0) c_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly QPoly::q() { return monomial(1, 1); }

QPoly QPoly::monomial(BigRational c, std::size_t k) {
  if (c == 0) return {};
  std::vector<BigRational> v(k + 1, BigRational(0));
  v[k] = std::move(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational QPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const BigRational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1, BigRational(0));
  mpq_class t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r[i + j] += t;
    }
  }
  QPoly p;
  p.c_ = std::move(r);
  p.trim();
  return p;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<BigRational> rem = a.c_;
  std::vector<BigRational> quo(a.c_.size() - b.c_.size() + 1, BigRational(0));
  const BigRational& lead = b.leading();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    BigRational f = rem[k + db] / lead;
    if (f == 0) continue;
    quo[k] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

namespace {

using ZPoly = std::vector<mpz_class>;

void make_primitive(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  mpz_class g = 0;
  for (const auto& v : z) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_part(const QPoly& a) {
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(z);
  return z;
}

// Pseudo-remainder of a by b, with content removed.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpz_class la = a.back();
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    make_primitive(a);
  }
  return a;
}

}  // namespace

// Primitive polynomial remainder sequence over the integers; keeps
// coefficient growth in check compared to Euclid over the rationals.
QPoly gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return QPoly(1);
    ZPoly r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<BigRational> c;
  c.reserve(x.size());
  for (const auto& v : x) c.emplace_back(v);
  return QPoly(std::move(c)).monic();
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  QPoly r = *this;
  r *= BigRational(1) / leading();
  return r;
}

BigRational QPoly::eval(const BigRational& at) const {
  BigRational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const BigRational& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigRational mag = neg ? BigRational(-c) : c;
    if (neg) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace umbral
