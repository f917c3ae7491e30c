#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treespectra/polynomial.hpp"

using namespace treespectra;

TEST_CASE("construction trims and reports degree") {
  CHECK(Poly{}.is_zero());
  CHECK(Poly{1, 0, 0}.degree() == 0);
  CHECK(Poly{0, 0, 1}.degree() == 2);
  CHECK(Poly{-4, -6, 0, 1}.is_monic());
}

TEST_CASE("arithmetic") {
  Poly p = Poly::linear_power(Rat(1), 2) * Poly{-1, 1};  // (x+1)^2 (x-1)
  CHECK(p == Poly{-1, -1, 1, 1});

  CHECK(Poly{1, 2} + Poly{3, -2} == Poly{4});
  CHECK(Poly{1, 2} - Poly{1, 2} == Poly{});
  CHECK(Poly{0, 1} * Poly{} == Poly{});
  CHECK(Poly{2, 4}.scaled(Rat(1, 2)) == Poly{1, 2});
}

TEST_CASE("shift_power") {
  Poly p{-4, -6, 0, 1};  // x^3 - 6x - 4
  CHECK(shift_power(p, Rat(2), 0) == p);
  CHECK(shift_power(p, Rat(2), 1) == Poly{-8, -16, -8, 2, 1} - Poly{0, 0, 8});
  // (x+2)(x^3-6x-4) = x^4 + 2x^3 - 6x^2 - 16x - 8
  CHECK(shift_power(p, Rat(2), 1) == Poly{-8, -16, -6, 2, 1});
}

TEST_CASE("evaluate and negate") {
  Poly p{-4, -6, 0, 1};
  CHECK(p.evaluate(Rat(0)) == -4);
  CHECK(p.evaluate(Rat(3)) == 27 - 18 - 4);
  CHECK(p.compose_negate() == Poly{-4, 6, 0, -1});
  CHECK(p.evaluate(Rat(1, 2)) == Rat(1, 8) - Rat(3) - Rat(4));
}

TEST_CASE("division") {
  Poly num{-1, -1, 1, 1};  // (x+1)^2 (x-1)
  Poly den{1, 1};          // x + 1
  CHECK(divides(den, num));
  CHECK(exact_divide(num, den) == Poly{-1, 0, 1});
  CHECK_FALSE(divides(Poly{1, 1, 1}, num));
  CHECK_THROWS_AS(exact_divide(num, Poly{1, 1, 1}), Error);
  CHECK_THROWS_AS(poly_divmod(num, Poly{}), Error);

  auto [q, r] = poly_divmod(Poly{1, 0, 0, 1}, Poly{1, 1});  // x^3+1 = (x+1)(x^2-x+1)
  CHECK(q == Poly{1, -1, 1});
  CHECK(r.is_zero());
}

TEST_CASE("integer coefficient extraction") {
  Poly p{3, -2, 1};
  std::vector<Int> c = p.integer_coeffs();
  CHECK(c == std::vector<Int>{3, -2, 1});
  Poly half(std::vector<Rat>{Rat(1, 2)});
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS_AS(half.integer_coeffs(), Error);
}

TEST_CASE("to_string") {
  CHECK(Poly{-4, -6, 0, 1}.to_string() == "x^3 - 6*x - 4");
  CHECK(Poly{}.to_string() == "0");
  CHECK(Poly{5}.to_string() == "5");
}
