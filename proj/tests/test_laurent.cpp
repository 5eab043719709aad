#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "chebyknot/laurent.hpp"

using namespace chebyknot;

namespace {
LaurentPoly A(int e, Coeff c = 1) { return LaurentPoly::monomial(e, c); }
}

TEST_CASE("arithmetic and normal form") {
  LaurentPoly p = A(2) + A(-2);
  CHECK((p - p).is_zero());
  CHECK(p.terms().size() == 2);
  CHECK(LaurentPoly::delta() == -p);
  CHECK(LaurentPoly::delta_power(2) == A(4) + LaurentPoly(2) + A(-4));
  CHECK(LaurentPoly::delta_power(0) == LaurentPoly(1));
  CHECK(p.pow(3) == p * p * p);
  CHECK(A(3).mirror() == A(-3));
  CHECK(A(1, 5).shifted(-4) == A(-3, 5));
  CHECK(LaurentPoly(0).is_zero());
  CHECK(add(A(1), A(1)) == A(1, 2));
  CHECK(mul(A(1), A(-1)) == LaurentPoly(1));
}

TEST_CASE("delta times delta inverse identities") {
  auto d = LaurentPoly::delta();
  // 2 - delta^2 = -A^4 - A^-4
  CHECK(LaurentPoly(2) - d * d == A(4, -1) + A(-4, -1));
  CHECK(d.min_exponent() == -2);
  CHECK(d.max_exponent() == 2);
}

TEST_CASE("text and json rendering") {
  LaurentPoly p = A(5, -1) + A(-3, -1) + A(-7);
  CHECK(p.to_string() == "-A^5 - A^-3 + A^-7");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK((A(1, 3) - LaurentPoly(2)).to_string() == "3A - 2");
  auto j = p.to_json();
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0][0] == 5);
  CHECK(j[0][1] == -1);
  CHECK(j[2][0] == -7);
}

TEST_CASE("coefficient strings use the exponent stride") {
  LaurentPoly trefoil = A(5, -1) + A(-3, -1) + A(-7);
  CHECK(coefficient_string(trefoil) == std::vector<Coeff>{-1, 0, -1, 1});
  CHECK(coefficient_string(A(-3, -1)) == std::vector<Coeff>{-1});
  CHECK(coefficient_string(LaurentPoly::delta()) == std::vector<Coeff>{-1, -1});
  CHECK_THROWS_AS(coefficient_string(LaurentPoly()), std::invalid_argument);
}

TEST_CASE("jones normalization") {
  LaurentPoly trefoil = A(5, -1) + A(-3, -1) + A(-7);
  auto v = jones_normalize(trefoil, 3);
  CHECK(v.to_string() == "t + t^3 - t^4");
  CHECK(v.integral());
  CHECK(jones_normalize(LaurentPoly(1), 0).to_string() == "1");
  // one kink: <K> = -A^-3, writhe -1
  CHECK(jones_normalize(A(-3, -1), -1).to_string() == "1");
  // Hopf link has half-integer exponents
  auto hopf = jones_normalize(A(4, -1) + A(-4, -1), 2);
  CHECK_FALSE(hopf.integral());
  CHECK(hopf.coeff_quarter(2) == -1);
  CHECK(hopf.coeff_quarter(10) == -1);
}

TEST_CASE("overflow is detected rather than wrapped") {
  const Coeff big = std::numeric_limits<Coeff>::max();
  CHECK_THROWS_AS(checked::add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), std::overflow_error);
  LaurentPoly p = A(0, big);
  CHECK_THROWS_AS(p + LaurentPoly(1), std::overflow_error);
  CHECK_THROWS_AS(p * LaurentPoly(2), std::overflow_error);
  CHECK(checked::add(big - 1, 1) == big);
}
