#pragma once

// Certified real and complex interval arithmetic on top of MPFR.
//
// Every Interval operation rounds its lower endpoint toward -inf and its
// upper endpoint toward +inf, so the exact result of the corresponding real
// operation is always enclosed. Results carry the larger precision of the
// operands.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace lrs {

using Prec = mpfr_prec_t;

/// RAII owner of one mpfr_t.
class Float {
public:
  explicit Float(Prec prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Float(const Float& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Float(Float&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Float& operator=(const Float& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Float() { mpfr_clear(v_); }

  static Float from_double(double x, Prec prec);
  static Float from_q(const mpq_class& q, Prec prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  Prec prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal scientific rendering with `digits` significant digits.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

private:
  mpfr_t v_;
};

class Interval {
public:
  explicit Interval(Prec prec = 64) : lo_(prec), hi_(prec) {}
  Interval(Float lo, Float hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  static Interval from_q(const mpq_class& q, Prec prec);
  static Interval from_z(const mpz_class& z, Prec prec);
  static Interval from_si(long v, Prec prec);
  static Interval from_float(const Float& x);
  /// Interval for [lo, hi] given as exact rationals (outward rounded).
  static Interval from_bounds(const mpq_class& lo, const mpq_class& hi, Prec prec);
  static Interval pi(Prec prec);
  static Interval minus_infinity(Prec prec);

  const Float& lo() const { return lo_; }
  const Float& hi() const { return hi_; }
  Float& lo() { return lo_; }
  Float& hi() { return hi_; }
  Prec prec() const { return std::max(lo_.prec(), hi_.prec()); }

  bool contains_zero() const;
  bool contains(const mpq_class& q) const;
  bool contains(const Interval& inner) const;
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  /// Upper bound on hi - lo.
  Float width() const;
  /// Upper bound on (hi - lo) / min(|lo|, |hi|); +inf when the interval touches 0.
  Float relative_width() const;
  Float mid() const;
  double mid_double() const { return mid().to_double(); }

  std::string to_string(int digits = 20) const;

private:
  Float lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval mul_q(const Interval& a, const mpq_class& q);
Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);
Interval exp(const Interval& a);
Interval log1p_exp(const Interval& a);
Interval pow_ui(const Interval& a, unsigned long e);
/// a^q for a > 0 and rational q, via exp(q log a).
Interval pow_q(const Interval& a, const mpq_class& q);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval with_prec(const Interval& a, Prec prec);

/// Certified strict comparisons: true only when every point of `a` is < every point of `b`.
bool certainly_lt(const Interval& a, const Interval& b);
bool certainly_le(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re, im;

  explicit ComplexInterval(Prec prec = 64) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexInterval from_q(const mpq_class& q, Prec prec);
  Prec prec() const { return std::max(re.prec(), im.prec()); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  std::string to_string(int digits = 20) const;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval mul_q(const ComplexInterval& a, const mpq_class& q);
ComplexInterval conj(const ComplexInterval& a);
ComplexInterval pow_ui(const ComplexInterval& a, unsigned long e);
Interval abs2(const ComplexInterval& a);
Interval abs(const ComplexInterval& a);
bool overlaps(const ComplexInterval& a, const ComplexInterval& b);

}  // namespace lrs
