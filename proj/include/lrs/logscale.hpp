#pragma once

// Nonnegative reals stored as an enclosure of their natural logarithm, so that
// quantities like exp(14^16) or exp(exp(1e29)) stay comparable. A lower
// endpoint of -inf means the value may be zero.

#include "lrs/interval.hpp"

#include <string>

namespace lrs {

constexpr Prec kBoundPrecision = 128;

class LogScale {
public:
  explicit LogScale(Prec prec = kBoundPrecision) : ln_(Interval::minus_infinity(prec)) {}

  static LogScale zero(Prec prec = kBoundPrecision) { return LogScale(prec); }
  static LogScale one(Prec prec = kBoundPrecision) { return from_ln(Interval::from_si(0, prec)); }
  static LogScale from_ln(Interval ln);
  /// Throws DomainError for negative inputs.
  static LogScale from_q(const mpq_class& q, Prec prec = kBoundPrecision);
  static LogScale from_z(const mpz_class& z, Prec prec = kBoundPrecision);
  /// Enclosure of a nonnegative interval (negative parts are clipped to 0).
  static LogScale from_interval(const Interval& x);
  /// e^x.
  static LogScale exp_of(const Interval& x) { return from_ln(x); }

  const Interval& ln() const { return ln_; }
  Prec prec() const { return ln_.prec(); }
  bool may_be_zero() const;
  bool is_zero() const;
  /// Upper bound of ln, rounded up to `digits` significant decimal digits.
  std::string ln_upper(int digits = 30) const;
  /// Enclosure of the value itself; only sensible for moderate magnitudes.
  Interval value() const;

  friend LogScale operator*(const LogScale& a, const LogScale& b);
  /// b must be certainly positive.
  friend LogScale operator/(const LogScale& a, const LogScale& b);
  friend LogScale operator+(const LogScale& a, const LogScale& b);
  /// a^r for rational r >= 0.
  friend LogScale pow(const LogScale& a, const mpq_class& r);
  friend LogScale max(const LogScale& a, const LogScale& b);

private:
  Interval ln_;
};

/// Every represented value of a is below every value of b.
bool certainly_lt(const LogScale& a, const LogScale& b);
bool certainly_le(const LogScale& a, const LogScale& b);

}  // namespace lrs
