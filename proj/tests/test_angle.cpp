#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coxangle/angle.hpp"

using namespace coxangle;

namespace {

Rational q(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(Angle::exact_cos(1), std::invalid_argument);
  CHECK_THROWS_AS(Angle::exact_cos(Rational(-3, 2)), std::invalid_argument);
  CHECK_NOTHROW(Angle::exact_cos(-1));
  CHECK_THROWS_AS(Angle::rational_pi(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Angle::rational_pi(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(Angle::rational_pi(1, 0), std::invalid_argument);
  CHECK(Angle::rational_pi(4, 8).value() == Rational(1, 2));
  CHECK(Angle::rational_pi(4, 8).kind() == Angle::Kind::RationalPi);
}

TEST_CASE("equality is by value across kinds") {
  CHECK(Angle::exact_cos(0) == Angle::rational_pi(1, 2));
  CHECK(Angle::exact_cos(-1) == Angle::rational_pi(1, 1));
  CHECK(Angle::exact_cos(Rational(1, 2)) == Angle::rational_pi(1, 3));
  CHECK(Angle::exact_cos(Rational(-1, 2)) == Angle::rational_pi(2, 3));
  CHECK(Angle::exact_cos(Rational(1, 3)) != Angle::rational_pi(2, 5));
  CHECK(Angle::rational_pi(2, 6) == Angle::rational_pi(1, 3));
}

TEST_CASE("verdicts against pi/3") {
  CHECK(compare_with_pi_over_3(Angle::exact_cos(Rational(1, 2))) == Verdict::EqualPiOver3);
  CHECK(compare_with_pi_over_3(Angle::rational_pi(1, 3)) == Verdict::EqualPiOver3);
  CHECK(compare_with_pi_over_3(Angle::exact_cos(Rational(1, 3))) == Verdict::GreaterThanPiOver3);
  CHECK(compare_with_pi_over_3(Angle::exact_cos(Rational(2, 3))) == Verdict::LessThanPiOver3);
  CHECK(compare_with_pi_over_3(Angle::rational_pi(1, 4)) == Verdict::LessThanPiOver3);
  CHECK(compare_with_pi_over_3(Angle::rational_pi(2, 5)) == Verdict::GreaterThanPiOver3);
  CHECK(compare_with_pi_over_3(Angle::rational_pi(1, 1)) == Verdict::GreaterThanPiOver3);
  // one part in 10^40 either side of the threshold
  const Rational eps = q("1/10000000000000000000000000000000000000000");
  CHECK(compare_with_pi_over_3(Angle::exact_cos(Rational(1, 2) - eps)) == Verdict::GreaterThanPiOver3);
  CHECK(compare_with_pi_over_3(Angle::exact_cos(Rational(1, 2) + eps)) == Verdict::LessThanPiOver3);
  CHECK(verdict_code(Verdict::EqualPiOver3) == "EQ_PI_3");
  CHECK(verdict_code(Verdict::GreaterThanPiOver3) == "GT_PI_3");
  CHECK(verdict_code(Verdict::LessThanPiOver3) == "LT_PI_3");
}

TEST_CASE("verdicts are stable across repeated evaluation") {
  const Angle a = Angle::exact_cos(Rational(1, 2));
  for (int k = 0; k < 100; ++k) CHECK(compare_with_pi_over_3(a) == Verdict::EqualPiOver3);
}

TEST_CASE("interval refinement separates near ties") {
  // cos(2pi/5) = (sqrt 5 - 1)/4 = 0.30901699437494742410229341718281905886...
  const Rational below = q("309016994374947424102293417182819/1000000000000000000000000000000000");
  const Rational above = below + q("1/1000000000000000000000000000000000");
  CHECK(Angle::exact_cos(below) > Angle::rational_pi(2, 5));
  CHECK(Angle::exact_cos(above) < Angle::rational_pi(2, 5));
  CHECK(Angle::rational_pi(2, 5) < Angle::exact_cos(below));
  CHECK(Angle::exact_cos(Rational(1, 3)) < Angle::rational_pi(2, 5));
  CHECK(Angle::exact_cos(Rational(-1, 3)) > Angle::rational_pi(3, 5));
}

TEST_CASE("ordering agrees with floating point away from ties") {
  std::mt19937 rng(9);
  auto random_angle = [&]() {
    if (rng() % 2) {
      const long qd = 1 + rng() % 24;
      return Angle::rational_pi(1 + static_cast<long>(rng() % qd), qd);
    }
    const long d = 1 + rng() % 50;
    const long n = static_cast<long>(rng() % (2 * d)) - d;
    return Angle::exact_cos(Rational(n, d));
  };
  for (int k = 0; k < 3000; ++k) {
    const Angle a = random_angle();
    const Angle b = random_angle();
    const double x = a.radians_approx(), y = b.radians_approx();
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    if (std::abs(x - y) > 1e-9) CHECK(((a < b) == (x < y)));
    CHECK(((a < b) == (b > a)));
    CHECK(((a == b) == (b == a)));
  }
}

TEST_CASE("rational cosines and pi fractions") {
  CHECK(Angle::rational_pi(1, 3).rational_cos() == Rational(1, 2));
  CHECK(!Angle::rational_pi(1, 5).rational_cos());
  CHECK(Angle::exact_cos(0).pi_fraction() == Rational(1, 2));
  CHECK(!Angle::exact_cos(Rational(1, 3)).pi_fraction());
}

TEST_CASE("display") {
  CHECK(Angle::rational_pi(1, 1).to_string() == "π");
  CHECK(Angle::rational_pi(1, 2).to_string() == "π/2");
  CHECK(Angle::rational_pi(2, 5).to_string() == "2π/5");
  CHECK(Angle::exact_cos(Rational(1, 3)).to_string() == "arccos(1/3)");
  CHECK(Angle::exact_cos(Rational(-1, 3)).to_string() == "arccos(-1/3)");
  CHECK(Angle::exact_cos(0).to_string() == "π/2");
  CHECK(Angle::exact_cos(Rational(1, 3)).radians_approx() == doctest::Approx(1.2309594173407747));
  CHECK(Angle::rational_pi(1, 1).radians_approx() == doctest::Approx(std::numbers::pi));
}
