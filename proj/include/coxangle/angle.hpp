#pragma once

#include <compare>
#include <optional>
#include <string>

#include "coxangle/rational.hpp"

namespace coxangle {

/// Exact angle in (0, pi]: either arccos of a rational or a rational
/// multiple of pi. Comparisons are exact; equality is by value, so
/// ExactCos(0) == RationalPi(1, 2).
class Angle {
 public:
  enum class Kind { ExactCos, RationalPi };

  /// Throws std::invalid_argument unless -1 <= cos < 1.
  static Angle exact_cos(const Rational& cos);
  /// p*pi/q, reduced to lowest terms; throws std::invalid_argument unless
  /// 0 < p/q <= 1.
  static Angle rational_pi(long p, long q);

  Kind kind() const { return kind_; }
  /// Cosine (ExactCos) or the pi fraction p/q (RationalPi).
  const Rational& value() const { return value_; }

  /// cos(angle) when it is rational: always for ExactCos, and for
  /// RationalPi only at p/q in {1/3, 1/2, 2/3, 1}.
  std::optional<Rational> rational_cos() const;
  /// angle/pi when it is rational.
  std::optional<Rational> pi_fraction() const;

  /// Display only; never used to decide anything.
  double radians_approx() const;

  /// "pi/2", "2pi/5", "arccos(1/3)"; threshold cosines print as pi fractions.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b) { return (a <=> b) == 0; }

 private:
  Angle(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

enum class Verdict { GreaterThanPiOver3, EqualPiOver3, LessThanPiOver3 };

/// Exact trichotomy against pi/3.
Verdict compare_with_pi_over_3(const Angle& a);

/// "GT_PI_3", "EQ_PI_3", "LT_PI_3".
std::string verdict_code(Verdict v);

}  // namespace coxangle
