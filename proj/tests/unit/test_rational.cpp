#include <doctest.h>

#include "support.hpp"
#include "tropkp/matrix.hpp"
#include "tropkp/rational.hpp"
#include "tropkp/subsets.hpp"

using namespace tropkp;
using tropkp::testing::rv;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.-5"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("to_string formats") {
  CHECK(to_string(frac(4, 2)) == "2");
  CHECK(frac(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(frac(1, 0), DomainError);
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  IntVec v{1, -2, 0};
  CHECK(to_string(std::span<const long>(v)) == "(1,-2,0)");
}

TEST_CASE("pow and exact_sqrt") {
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(0), 3) == 0);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
  CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK_THROWS_AS(exact_sqrt(Rational(2)), DomainError);
  CHECK_THROWS_AS(exact_sqrt(Rational(-4)), DomainError);
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("LogRational arithmetic is exact in the exponent") {
  LogRational a(Rational(4)), b(Rational(1, 2));
  CHECK((a + b).exp() == 2);
  CHECK((a - b).exp() == 8);
  CHECK((-a).exp() == Rational(1, 4));
  CHECK((b * 3).exp() == Rational(1, 8));
  CHECK((b * -2).exp() == 4);
  CHECK(a.exp_half() == 2);
  CHECK(a.approx() == doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(LogRational(Rational(0)), DomainError);
  CHECK_THROWS_AS(LogRational(Rational(-1)), DomainError);
  CHECK_THROWS_AS(b.exp_half(), DomainError);
}

TEST_CASE("determinant, rank and definiteness") {
  RatMatrix m(3, 3);
  const long vals[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(determinant(m) == 4);
  CHECK(rank(m) == 3);
  CHECK(is_positive_definite(m));
  CHECK(m.is_symmetric());
  // Zero leading pivot forces a row swap.
  RatMatrix p(2, 2);
  p(0, 1) = 1;
  p(1, 0) = 1;
  CHECK(determinant(p) == -1);
  CHECK_FALSE(is_positive_definite(p));
  RatMatrix z(2, 3);
  z(0, 0) = 1;
  z(1, 0) = 2;
  CHECK(rank(z) == 1);
  CHECK(RatMatrix::identity(3) * m == m);
  CHECK(m.transpose().transpose() == m);
  auto x = rv({"1", "2", "3"});
  CHECK(bilinear(x, RatMatrix::identity(3), x) == 14);
}

TEST_CASE("subset helpers") {
  auto s = k_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == IntVec{1, 2});
  CHECK(s.back() == IntVec{3, 4});
  CHECK(k_subsets(5, 0).size() == 1);
  CHECK(indicator({1, 3}, 4) == IntVec{1, 0, 1, 0});
  CHECK(support({0, 1, 1}) == IntVec{2, 3});
  CHECK_THROWS_AS(support({0, 2}), InternalError);
  CHECK(complement({2}, 3) == IntVec{1, 3});
  CHECK(bit_string({1, 2}, 4) == "1100");
}
