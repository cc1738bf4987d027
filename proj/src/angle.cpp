#include "coxangle/angle.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coxangle {

namespace {

// Sign of (arccos(c)/pi - f) for a cosine c that is not one of the five
// rational values of cos(rational * pi); the difference is then never zero
// and interval refinement terminates.
int compare_arccos_with_pi_fraction(const Rational& c, const Rational& f) {
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    mpfr_t c_lo, c_hi, t_lo, t_hi, pi_lo, pi_hi;
    mpfr_inits2(prec, c_lo, c_hi, t_lo, t_hi, pi_lo, pi_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(c_lo, c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(c_hi, c.get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp_si(c_lo, -1) < 0) mpfr_set_si(c_lo, -1, MPFR_RNDN);
    if (mpfr_cmp_si(c_hi, 1) > 0) mpfr_set_si(c_hi, 1, MPFR_RNDN);
    // arccos is decreasing.
    mpfr_acos(t_lo, c_hi, MPFR_RNDD);
    mpfr_acos(t_hi, c_lo, MPFR_RNDU);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_div(t_lo, t_lo, pi_hi, MPFR_RNDD);
    mpfr_div(t_hi, t_hi, pi_lo, MPFR_RNDU);
    int result = 0;
    if (mpfr_cmp_q(t_hi, f.get_mpq_t()) < 0)
      result = -1;
    else if (mpfr_cmp_q(t_lo, f.get_mpq_t()) > 0)
      result = 1;
    mpfr_clears(c_lo, c_hi, t_lo, t_hi, pi_lo, pi_hi, static_cast<mpfr_ptr>(nullptr));
    if (result != 0) return result;
    if (prec > (mpfr_prec_t{1} << 20)) throw std::logic_error("angle comparison did not separate");
  }
}

std::strong_ordering from_sign(int s) {
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

Angle Angle::exact_cos(const Rational& cos) {
  if (cos < -1 || cos >= 1) throw std::invalid_argument("cosine " + cos.get_str() + " outside [-1, 1)");
  Rational c = cos;
  c.canonicalize();
  return Angle(Kind::ExactCos, c);
}

Angle Angle::rational_pi(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational f(p, q);
  f.canonicalize();
  if (f <= 0 || f > 1) throw std::invalid_argument("pi fraction " + f.get_str() + " outside (0, 1]");
  return Angle(Kind::RationalPi, f);
}

std::optional<Rational> Angle::rational_cos() const {
  if (kind_ == Kind::ExactCos) return value_;
  if (value_ == 1) return Rational(-1);
  if (value_ == Rational(2, 3)) return Rational(-1, 2);
  if (value_ == Rational(1, 2)) return Rational(0);
  if (value_ == Rational(1, 3)) return Rational(1, 2);
  return std::nullopt;
}

std::optional<Rational> Angle::pi_fraction() const {
  if (kind_ == Kind::RationalPi) return value_;
  if (value_ == -1) return Rational(1);
  if (value_ == Rational(-1, 2)) return Rational(2, 3);
  if (value_ == 0) return Rational(1, 2);
  if (value_ == Rational(1, 2)) return Rational(1, 3);
  return std::nullopt;
}

double Angle::radians_approx() const {
  if (kind_ == Kind::RationalPi) return value_.get_d() * std::numbers::pi;
  return std::acos(value_.get_d());
}

std::string Angle::to_string() const {
  if (const auto f = pi_fraction()) {
    const Integer& p = f->get_num();
    const Integer& q = f->get_den();
    std::string s = p == 1 ? "π" : p.get_str() + "π";
    if (q != 1) s += "/" + q.get_str();
    return s;
  }
  return "arccos(" + value_.get_str() + ")";
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  using K = Angle::Kind;
  if (a.kind_ == K::RationalPi && b.kind_ == K::RationalPi) return from_sign(cmp(a.value_, b.value_));
  if (a.kind_ == K::ExactCos && b.kind_ == K::ExactCos) return from_sign(cmp(b.value_, a.value_));

  const Angle& c = a.kind_ == K::ExactCos ? a : b;
  const Angle& p = a.kind_ == K::ExactCos ? b : a;
  const int flip = a.kind_ == K::ExactCos ? 1 : -1;  // sign of (a - b) relative to (c - p)
  int s;
  if (const auto cf = c.pi_fraction())
    s = cmp(*cf, p.value_);
  else if (const auto pc = p.rational_cos())
    s = cmp(*pc, c.value_);
  else
    s = compare_arccos_with_pi_fraction(c.value_, p.value_);
  return from_sign(flip * (s > 0 ? 1 : (s < 0 ? -1 : 0)));
}

Verdict compare_with_pi_over_3(const Angle& a) {
  const auto s = a <=> Angle::rational_pi(1, 3);
  if (s > 0) return Verdict::GreaterThanPiOver3;
  if (s < 0) return Verdict::LessThanPiOver3;
  return Verdict::EqualPiOver3;
}

std::string verdict_code(Verdict v) {
  switch (v) {
    case Verdict::GreaterThanPiOver3: return "GT_PI_3";
    case Verdict::EqualPiOver3: return "EQ_PI_3";
    case Verdict::LessThanPiOver3: return "LT_PI_3";
  }
  return "?";
}

}  // namespace coxangle
