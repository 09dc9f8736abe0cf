#include <doctest.h>

#include "satake/finite_field.hpp"
#include "satake/interpolation.hpp"
#include "satake/laurent.hpp"
#include "satake/linalg.hpp"

#include <random>

using namespace satake;

TEST_SUITE("algebra") {

TEST_CASE("smith invariants") {
  CHECK(smith_invariants(IntMatrix::from_rows({{2, -1}, {-1, 2}})) == std::vector<Int>{3});
  CHECK(smith_invariants(IntMatrix::from_rows({{2, 0}, {0, 2}})) == std::vector<Int>{2, 2});
  CHECK(smith_invariants(IntMatrix::from_rows({{1}, {-1}})) == std::vector<Int>{0});
  CHECK(smith_invariants(IntMatrix::from_rows({{1, -1}})).empty());
}

TEST_CASE("rational solve and inverse") {
  const IntMatrix a = IntMatrix::from_rows({{2, -1}, {-1, 2}});
  const auto x = solve(a, to_rational({1, 0}));
  REQUIRE(x);
  CHECK((*x)[0] == Rational(2, 3));
  CHECK((*x)[1] == Rational(1, 3));
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(2, 3));
  CHECK_FALSE(solve(IntMatrix::from_rows({{1, 1}, {1, 1}}), to_rational({1, 0})));
}

TEST_CASE("laurent ring operations") {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly a = q - 1;
  CHECK((a * a).coeffs() == std::vector<Int>{1, -2, 1});
  CHECK(a.pow(3).evaluate_int(3) == 8);
  CHECK((q * q.invert_variable()) == LaurentPoly(1));
  CHECK(LaurentPoly::half_power(1).evaluate(4).to_string() == SurdValue::from_rational(2, 4).to_string());
  CHECK(cell_polynomial(2, 1) == LaurentPoly::q_power(2) * a);
  CHECK_FALSE(LaurentPoly::half_power(1).has_integral_exponents());
  CHECK((LaurentPoly(3) - 3).is_zero());
}

TEST_CASE("laurent evaluation matches horner on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> cs(5);
    for (auto& c : cs) c = coef(rng);
    const LaurentPoly p = LaurentPoly::from_coeffs(cs);
    for (Int x : {2, 3, 7}) {
      Int h = 0;
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) h = h * x + *it;
      CHECK(p.evaluate_int(x) == h);
    }
  }
}

TEST_CASE("finite fields satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    REQUIRE(FiniteField::supported(q));
    const FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }
  CHECK_FALSE(FiniteField::supported(6));
}

TEST_CASE("integer interpolation recovers random polynomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-20, 20);
  const std::vector<Int> xs{2, 3, 4, 5, 7, 8};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> cs(4);
    for (auto& c : cs) c = coef(rng);
    const LaurentPoly p = LaurentPoly::from_coeffs(cs);
    std::vector<Int> ys;
    for (Int x : xs) ys.push_back(p.evaluate_int(x));
    auto got = interpolate_checked(xs, ys, 3);
    REQUIRE(got);
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    CHECK(*got == cs);
  }
}

TEST_CASE("interpolation rejects non-polynomial data and short samples") {
  CHECK_FALSE(interpolate_checked({2, 3, 4, 5}, {1, 2, 4, 8}, 2));
  CHECK_THROWS(interpolate_checked({2, 3}, {1, 1}, 2));
}

}
