#include <doctest.h>

#include "oracles.hpp"
#include "umbral/plane.hpp"

using namespace umbral;
using oracle::q;
using oracle::rf;

TEST_CASE("b sequence") {
  const auto qg = b_sequence(PsiSequence::qgauss(), 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(qg[n] == q().pow(static_cast<long>(n)));
  CHECK(qg[3] == q().pow(3));
  for (const auto& b : b_sequence(PsiSequence::classic(), 8)) CHECK(b == rf(1));
  for (const auto& name : PsiSequence::builtin_names()) CHECK(b_sequence(PsiSequence::builtin(name), 0)[0] == rf(1));

  // product form for fibonacci: b_n = prod ((k+1)_psi - 1)/k_psi
  const auto fib = PsiSequence::fibonacci();
  const auto b = b_sequence(fib, 7);
  RationalFunction prod(1);
  for (std::size_t n = 1; n <= 7; ++n) {
    prod = prod * (fib.number(n + 1) - rf(1)) / fib.number(n);
    CHECK(b[n] == prod);
  }
}

TEST_CASE("plane operators") {
  const BiPoly one(Poly(1L));
  const auto b = b_sequence(PsiSequence::qgauss(), 3);
  const BiPoly x = plane_apply_a(one);
  CHECK(coeff_xy(x, 1, 0) == rf(1));
  const BiPoly bx = plane_apply_b(b, x);
  CHECK(coeff_xy(bx, 1, 1) == q());
  CHECK_THROWS_AS(plane_apply_b(b, plane_apply_a(plane_apply_a(plane_apply_a(x)))), std::out_of_range);
  // y is central: A and B commute with multiplication by y
  const BiPoly y = embed_y(Poly::x());
  CHECK(plane_apply_a(y * x) == y * plane_apply_a(x));
  CHECK(plane_apply_b(b, y * x) == y * plane_apply_b(b, x));
}

TEST_CASE("commutation holds on the grid") {
  for (const auto& name : PsiSequence::builtin_names()) {
    const auto r = commutation_check(PsiSequence::builtin(name), 12);
    CHECK(r.residuals.size() == 12);
    CHECK(r.pass());
  }
}

TEST_CASE("q-binomial identity in the quantum plane") {
  const auto psi = PsiSequence::qgauss();
  const auto two = binomial_nogo(psi, 2);
  CHECK(two.holds());
  CHECK(coeff_xy(two.lhs, 2, 0) == rf(1));
  CHECK(coeff_xy(two.lhs, 1, 1) == rf(1) + q());
  CHECK(coeff_xy(two.lhs, 0, 2) == rf(1));
  CHECK(two.lhs == two.rhs);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto r = binomial_nogo(psi, n);
    CHECK(r.holds());
    CHECK(r.lhs == translation_apply(psi, Poly::monomial(rf(1), n)));
  }
}

TEST_CASE("binomial identity fails beyond the q case") {
  for (const auto& name : PsiSequence::builtin_names()) CHECK(binomial_nogo(PsiSequence::builtin(name), 0).holds());
  for (const char* name : {"fibonacci", "square"}) {
    const auto psi = PsiSequence::builtin(name);
    CHECK(binomial_nogo(psi, 2).holds());
    CHECK_FALSE(binomial_nogo(psi, 3).holds());
    CHECK(first_nogo_witness(psi, 4) == std::optional<std::size_t>(3));
  }
  CHECK_FALSE(first_nogo_witness(PsiSequence::qgauss(), 10).has_value());
}
