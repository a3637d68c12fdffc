#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "umbral/cmatrix.hpp"
#include "umbral/poly.hpp"

using namespace umbral;
using oracle::q;
using oracle::rf;

TEST_CASE("rational functions cancel to canonical form") {
  CHECK(q() + (rf(1) - q()) == rf(1));
  const RationalFunction quotient(QPoly(1) - QPoly::monomial(1, 2), QPoly(1) - QPoly::q());
  CHECK(quotient == rf(1) + q());
  CHECK(quotient.den().is_one());
  CHECK((quotient * rf(1)).to_string() == "1+q");
}

TEST_CASE("denominators are monic") {
  const RationalFunction r(QPoly(3), QPoly({BigRational(2), BigRational(4)}));  // 3/(2+4q)
  CHECK(r.den().leading() == 1);
  CHECK(r.to_string() == "(3/4)/(1/2+q)");
  CHECK(parse_rational_function(r.to_string()) == r);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_WITH_AS(rf(1) / rf(0), "zero divisor", std::domain_error);
  CHECK_THROWS_WITH_AS(RationalFunction(QPoly(1), QPoly()), "zero divisor", std::domain_error);
  CHECK_THROWS_AS(parse_rational_function("1/(q-q)"), std::invalid_argument);
}

TEST_CASE("rendering uses ascending powers of q") {
  CHECK((rf(1) + q() + q() * q()).to_string() == "1+q+q^2");
  CHECK((rf(1) / (rf(1) + q())).to_string() == "(1)/(1+q)");
  CHECK((-q().pow(3) * rf(2) + rf(-1)).to_string() == "-1-2*q^3");
  CHECK(rf(0).to_string() == "0");
}

TEST_CASE("parser accepts general expressions") {
  CHECK(parse_rational_function("(1-q^3)/(1-q)") == rf(1) + q() + q().pow(2));
  CHECK(parse_rational_function(" 1/2 + 3*q ") == RationalFunction(BigRational(1, 2)) + rf(3) * q());
  CHECK(parse_rational_function("q^-2") == (q() * q()).inverse());
  CHECK_THROWS_AS(parse_rational_function("1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_function("x"), std::invalid_argument);
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_ratfun(rng);
    const auto b = oracle::random_ratfun(rng);
    const auto c = oracle::random_ratfun(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == rf(1));
    // representation independence: scaling numerator and denominator
    CHECK(RationalFunction(a.num() * c.den(), a.den() * c.den()) == a);
    CHECK(parse_rational_function(a.to_string()) == a);
  }
}

TEST_CASE("rational evaluation") {
  const auto r = (rf(1) + q()) / (rf(2) - q());
  CHECK(r.eval(1) == 2);
  CHECK_THROWS_AS(r.eval(2), std::domain_error);
}

TEST_CASE("polynomial basics") {
  const Poly x = Poly::x();
  CHECK((x * x).eval(rf(0)) == rf(0));
  CHECK((x + Poly(1L)) * (x - Poly(1L)) == x * x - Poly(1L));
  CHECK((x * x * x).derivative() == (x * x).scaled(rf(3)));
  CHECK(Poly().degree() == -1);
  CHECK((x * x).compose(x + Poly(1L)) == x * x + x.scaled(rf(2)) + Poly(1L));
}

TEST_CASE("polynomial rendering") {
  const Poly x = Poly::x();
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(Poly(1L)) == "1");
  CHECK(to_string(x * x - x.scaled(rf(1) + q())) == "x^2 + (-1-q)*x");
  CHECK(to_string(Poly(1L) - x * x * x) == "-x^3 + 1");
  CHECK(to_string(x.scaled(q() - rf(1)), 't') == "(-1+q)*t");
  CHECK(to_string(x.scaled(rf(-2)) + Poly(rf(3) / rf(4))) == "-2*x + 3/4");
}

TEST_CASE("polynomial multiplication commutes and associates up to degree 16") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(0, 16);
  for (int trial = 0; trial < 12; ++trial) {
    const Poly a = oracle::random_poly(rng, deg(rng));
    const Poly b = oracle::random_poly(rng, deg(rng));
    const Poly c = oracle::random_poly(rng, deg(rng) / 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero_poly() && !b.is_zero_poly()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("bivariate embedding") {
  const Poly x = Poly::x();
  const BiPoly xy = embed_x(x) * embed_y(x);
  CHECK(coeff_xy(xy, 1, 1) == rf(1));
  CHECK(coeff_xy(xy, 0, 1) == rf(0));
  CHECK(at_y_zero(xy + embed_x(x * x)) == x * x);
  const auto table = coefficient_table(xy);
  REQUIRE(table.size() == 2);
  CHECK(table[1] == std::vector<std::string>{"0", "1"});
}

TEST_CASE("complex matrix operations") {
  ComplexMatrix a(2);
  a(0, 0) = {1, 2};
  a(0, 1) = {0, -1};
  a(1, 0) = 3;
  CHECK((a.adjoint().adjoint() - a).inf_norm() == 0.0);
  const Complex d[] = {4.0, 9.0};
  const auto s = ComplexMatrix::diagonal(d).diag_sqrt();
  CHECK(s(0, 0) == Complex(2.0));
  CHECK(s(1, 1) == Complex(3.0));
  CHECK_THROWS_WITH_AS(a.diag_sqrt(), "not diagonal", std::domain_error);
  const auto id = ComplexMatrix::identity(3);
  CHECK((id - id).inf_norm() == 0.0);
  CHECK_THROWS_AS(a * id, std::invalid_argument);
  CHECK((a.power(3) - a * a * a).inf_norm() < 1e-14);
  CHECK(std::abs(a.determinant() - (Complex(1, 2) * 0.0 - Complex(0, -1) * 3.0)) < 1e-14);
}

TEST_CASE("diag_sqrt squares back") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> d;
    for (int i = 0; i < 6; ++i) d.emplace_back(u(rng));
    const auto m = ComplexMatrix::diagonal(d);
    const auto s = m.diag_sqrt();
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs((s * s)(i, i) - d[i]) <= 1e-13 * std::max(1.0, d[i].real()));
  }
}
