#include <doctest.h>

#include <cmath>

#include "minbu/errors.hpp"
#include "minbu/series/radical_series.hpp"
#include "minbu/series/truncated_series.hpp"

using namespace minbu;

TEST_CASE("fractions render canonically") {
  CHECK(to_fraction(rational(6, 8)) == "3/4");
  CHECK(to_fraction(rational(-4, 2)) == "-2");
  CHECK(to_decimal(rational(5, 9)) == "0.555555555556");
  CHECK(to_decimal(rational(1, 8), 2) == "0.12");  // half-even
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(6) == 720);
}

TEST_CASE("product and quotient invert each other") {
  auto a = TruncatedSeries::from_integers({1, 2, 3, 4, 5, 6});
  auto b = TruncatedSeries::from_integers({1, -1, 0, 2, 0, 1});
  auto q = div(mul(a, b), b);
  CHECK(q.agrees_with(a, 5));
}

TEST_CASE("division by a zero constant term shifts the order") {
  auto a = TruncatedSeries::from_integers({0, 0, 1, 1, 1});
  auto b = TruncatedSeries::from_integers({0, 1, 1, 0, 0});
  auto q = div(a, b);
  CHECK(q.order() == 3);
  CHECK(q[0] == 0);
  CHECK(q[1] == 1);
  CHECK_THROWS_AS(div(a, TruncatedSeries::zero(4)), ZeroDivisor);
}

TEST_CASE("reversion undoes composition") {
  auto f = TruncatedSeries::from_integers({0, 1, 3, -2, 5, 7, 1});
  auto g = revert(f);
  auto id = compose(f, g);
  for (int n = 0; n <= 6; ++n) CHECK(id[n] == (n == 1 ? 1 : 0));
}

TEST_CASE("r = 1 + z r^3 gives the ternary tree numbers") {
  auto r = solve_polynomial_fixed_point(BigRational(1), 3, 8);
  long want[] = {1, 1, 3, 12, 55, 273, 1428, 7752, 43263};
  for (int n = 0; n <= 8; ++n) CHECK(r[n] == want[n]);
}

TEST_CASE("dilogarithm coefficients") {
  auto li = dilog_series(5);
  CHECK(li[0] == 0);
  CHECK(li[3] == rational(1, 9));
  auto lg = log_one_minus_series(4);
  CHECK(lg[2] == rational(-1, 2));
}

TEST_CASE("radical bookkeeping") {
  RadicalScalar a{rational(2), -1};
  CHECK(a.value() == doctest::Approx(2 / std::sqrt(3.0)));
  RadicalScaledSeries s(TruncatedSeries::from_integers({1, 2}), 0);
  CHECK(s.rational_coefficient(1) == 2);
  RadicalScaledSeries t(TruncatedSeries::from_integers({1, 2}), -1);
  CHECK_THROWS_AS(t.rational_coefficient(1), DomainError);
  auto sq = t * t;
  CHECK(sq.radical_power() == 0);
  CHECK(sq.rational_coefficient(1) == rational(4, 3));
}
