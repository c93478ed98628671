#include "lrs/logscale.hpp"

#include "lrs/errors.hpp"

namespace lrs {

namespace {

// ln(e^x + e^y) on one endpoint, every step rounded in direction rnd. All
// steps are increasing in x and y, so the result bounds the exact value.
void log_sum_exp(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
  mpfr_srcptr hi = mpfr_cmp(x, y) >= 0 ? x : y;
  mpfr_srcptr lo = hi == x ? y : x;
  if (mpfr_inf_p(lo) && mpfr_sgn(lo) < 0) {
    mpfr_set(out, hi, rnd);
    return;
  }
  Float t(mpfr_get_prec(out) + 16);
  mpfr_sub(t.get(), lo, hi, rnd);
  mpfr_exp(t.get(), t.get(), rnd);
  mpfr_log1p(t.get(), t.get(), rnd);
  mpfr_add(out, hi, t.get(), rnd);
}

bool is_minus_inf(const Float& f) { return mpfr_inf_p(f.get()) && f.sign() < 0; }

}  // namespace

LogScale LogScale::from_ln(Interval ln) {
  LogScale r(ln.prec());
  r.ln_ = std::move(ln);
  return r;
}

LogScale LogScale::from_q(const mpq_class& q, Prec prec) {
  if (q < 0) throw DomainError("log-scale value of a negative number");
  if (q == 0) return zero(prec);
  return from_ln(log(Interval::from_q(q, prec)));
}

LogScale LogScale::from_z(const mpz_class& z, Prec prec) { return from_q(mpq_class(z), prec); }

LogScale LogScale::from_interval(const Interval& x) {
  if (x.hi().sign() <= 0) {
    if (x.hi().sign() < 0) throw DomainError("log-scale value of a negative interval");
    return zero(x.prec());
  }
  return from_ln(log(x));
}

bool LogScale::may_be_zero() const { return is_minus_inf(ln_.lo()); }
bool LogScale::is_zero() const { return is_minus_inf(ln_.hi()); }

std::string LogScale::ln_upper(int digits) const { return ln_.hi().to_string(digits, MPFR_RNDU); }

Interval LogScale::value() const { return exp(ln_); }

LogScale operator*(const LogScale& a, const LogScale& b) {
  if (a.is_zero() || b.is_zero()) return LogScale::zero(std::max(a.prec(), b.prec()));
  return LogScale::from_ln(a.ln_ + b.ln_);
}

LogScale operator/(const LogScale& a, const LogScale& b) {
  if (b.may_be_zero()) throw DomainError("log-scale division by a value that may be zero");
  if (a.is_zero()) return a;
  return LogScale::from_ln(a.ln_ - b.ln_);
}

LogScale operator+(const LogScale& a, const LogScale& b) {
  LogScale r(std::max(a.prec(), b.prec()));
  log_sum_exp(r.ln_.lo().get(), a.ln_.lo().get(), b.ln_.lo().get(), MPFR_RNDD);
  log_sum_exp(r.ln_.hi().get(), a.ln_.hi().get(), b.ln_.hi().get(), MPFR_RNDU);
  return r;
}

LogScale pow(const LogScale& a, const mpq_class& r) {
  if (r < 0) throw DomainError("negative log-scale exponent");
  if (r == 0) return LogScale::one(a.prec());
  if (a.is_zero()) return a;
  LogScale out(a.prec());
  Interval q = Interval::from_q(r, a.prec());
  if (a.may_be_zero()) {
    // [-inf, h] * r = [-inf, h * r] for r > 0.
    mpfr_set_inf(out.ln_.lo().get(), -1);
    Interval h(a.ln_.hi(), a.ln_.hi());
    out.ln_.hi() = (h * q).hi();
    return out;
  }
  out.ln_ = a.ln_ * q;
  return out;
}

LogScale max(const LogScale& a, const LogScale& b) { return LogScale::from_ln(max(a.ln_, b.ln_)); }

bool certainly_lt(const LogScale& a, const LogScale& b) {
  if (b.may_be_zero()) return false;
  return certainly_lt(a.ln(), b.ln());
}

bool certainly_le(const LogScale& a, const LogScale& b) {
  if (a.is_zero()) return true;
  if (b.may_be_zero()) return false;
  return certainly_le(a.ln(), b.ln());
}

}  // namespace lrs
