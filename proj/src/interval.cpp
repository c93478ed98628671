#include "lrs/interval.hpp"

#include "lrs/errors.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace lrs {

Float Float::from_double(double x, Prec prec) {
  Float f(prec);
  mpfr_set_d(f.get(), x, MPFR_RNDN);
  return f;
}

Float Float::from_q(const mpq_class& q, Prec prec, mpfr_rnd_t rnd) {
  Float f(prec);
  mpfr_set_q(f.get(), q.get_mpq_t(), rnd);
  return f;
}

std::string Float::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(v_)) return "nan";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dR%cg", std::max(1, digits),
                rnd == MPFR_RNDD ? 'D' : rnd == MPFR_RNDU ? 'U' : 'N');
  int n = mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  }
  return std::string(buf.data());
}

namespace {

Prec pmax(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

// Endpoint products for interval multiplication; lo/hi rounded outward.
void mul_endpoints(Float& lo, Float& hi, const Interval& a, const Interval& b) {
  Prec p = lo.prec();
  std::array<const Float*, 2> as{&a.lo(), &a.hi()};
  std::array<const Float*, 2> bs{&b.lo(), &b.hi()};
  Float t(p);
  bool first = true;
  for (auto* x : as) {
    for (auto* y : bs) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (mpfr_nan_p(t.get())) mpfr_set_zero(t.get(), 1);  // 0 * inf
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (mpfr_nan_p(t.get())) mpfr_set_zero(t.get(), 1);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
}

}  // namespace

Interval Interval::from_q(const mpq_class& q, Prec prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_z(const mpz_class& z, Prec prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_si(long v, Prec prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_float(const Float& x) { return Interval(x, x); }

Interval Interval::from_bounds(const mpq_class& lo, const mpq_class& hi, Prec prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(Prec prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::minus_infinity(Prec prec) {
  Interval r(prec);
  mpfr_set_inf(r.lo_.get(), -1);
  mpfr_set_inf(r.hi_.get(), -1);
  return r;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_.get(), inner.lo_.get()) && mpfr_greaterequal_p(hi_.get(), inner.hi_.get());
}

Float Interval::width() const {
  Float w(prec());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Float Interval::relative_width() const {
  Float w = width();
  if (contains_zero()) {
    mpfr_set_inf(w.get(), 1);
    return w;
  }
  Float m(prec());
  mpfr_abs(m.get(), lo_.get(), MPFR_RNDD);
  Float m2(prec());
  mpfr_abs(m2.get(), hi_.get(), MPFR_RNDD);
  mpfr_min(m.get(), m.get(), m2.get(), MPFR_RNDD);
  mpfr_div(w.get(), w.get(), m.get(), MPFR_RNDU);
  return w;
}

Float Interval::mid() const {
  Float m(prec() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_add(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_sub(r.lo().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(r.hi().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mul_endpoints(r.lo(), r.hi(), a, b);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Prec p = pmax(a, b);
  Interval inv(p);
  // 1/b with b of constant sign: [1/hi, 1/lo].
  mpfr_ui_div(inv.lo().get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi().get(), 1, b.lo().get(), MPFR_RNDU);
  return a * inv;
}

Interval mul_q(const Interval& a, const mpq_class& q) { return a * Interval::from_q(q, a.prec()); }

Interval sqr(const Interval& a) {
  Interval r = abs(a);
  Interval out(a.prec());
  mpfr_sqr(out.lo().get(), r.lo().get(), MPFR_RNDD);
  mpfr_sqr(out.hi().get(), r.hi().get(), MPFR_RNDU);
  return out;
}

Interval abs(const Interval& a) {
  Interval r(a.prec());
  if (mpfr_sgn(a.lo().get()) >= 0) {
    mpfr_set(r.lo().get(), a.lo().get(), MPFR_RNDD);
    mpfr_set(r.hi().get(), a.hi().get(), MPFR_RNDU);
  } else if (mpfr_sgn(a.hi().get()) <= 0) {
    mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
    mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo().get(), 1);
    Float t(a.prec());
    mpfr_neg(t.get(), a.lo().get(), MPFR_RNDU);
    mpfr_max(r.hi().get(), t.get(), a.hi().get(), MPFR_RNDU);
  }
  return r;
}

Interval sqrt(const Interval& a) {
  if (a.is_negative()) throw DomainError("sqrt of a negative interval");
  Interval r(a.prec());
  if (mpfr_sgn(a.lo().get()) <= 0)
    mpfr_set_zero(r.lo().get(), 1);
  else
    mpfr_sqrt(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (!a.is_positive()) {
    if (mpfr_sgn(a.hi().get()) <= 0) throw DomainError("log of a non-positive interval");
    Interval r(a.prec());
    mpfr_set_inf(r.lo().get(), -1);
    mpfr_log(r.hi().get(), a.hi().get(), MPFR_RNDU);
    return r;
  }
  Interval r(a.prec());
  mpfr_log(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.prec());
  mpfr_exp(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_exp(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

Interval log1p_exp(const Interval& a) {
  // log(1 + e^a), increasing in a.
  Interval r(a.prec());
  Float t(a.prec() + 16);
  mpfr_exp(t.get(), a.lo().get(), MPFR_RNDD);
  mpfr_log1p(r.lo().get(), t.get(), MPFR_RNDD);
  mpfr_exp(t.get(), a.hi().get(), MPFR_RNDU);
  mpfr_log1p(r.hi().get(), t.get(), MPFR_RNDU);
  return r;
}

Interval pow_ui(const Interval& a, unsigned long e) {
  Prec p = a.prec();
  if (e == 0) return Interval::from_si(1, p);
  Interval result = Interval::from_si(1, p);
  Interval base = a;
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = sqr(base);
  }
  return result;
}

Interval pow_q(const Interval& a, const mpq_class& q) {
  if (q == 0) return Interval::from_si(1, a.prec());
  return exp(mul_q(log(a), q));
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_max(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_min(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_min(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

Interval with_prec(const Interval& a, Prec prec) {
  Interval r(prec);
  mpfr_set(r.lo().get(), a.lo().get(), MPFR_RNDD);
  mpfr_set(r.hi().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

bool certainly_lt(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi().get(), b.lo().get()) != 0; }

bool certainly_le(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.hi().get(), b.lo().get()) != 0;
}

bool overlaps(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.lo().get(), b.hi().get()) && mpfr_lessequal_p(b.lo().get(), a.hi().get());
}

ComplexInterval ComplexInterval::from_q(const mpq_class& q, Prec prec) {
  return ComplexInterval(Interval::from_q(q, prec), Interval::from_si(0, prec));
}

std::string ComplexInterval::to_string(int digits) const {
  return re.to_string(digits) + " + i*" + im.to_string(digits);
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re + b.re, a.im + b.im);
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re - b.re, a.im - b.im);
}

ComplexInterval operator-(const ComplexInterval& a) { return ComplexInterval(-a.re, -a.im); }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval n = abs2(b);
  ComplexInterval num = a * conj(b);
  return ComplexInterval(num.re / n, num.im / n);
}

ComplexInterval mul_q(const ComplexInterval& a, const mpq_class& q) {
  return ComplexInterval(mul_q(a.re, q), mul_q(a.im, q));
}

ComplexInterval conj(const ComplexInterval& a) { return ComplexInterval(a.re, -a.im); }

ComplexInterval pow_ui(const ComplexInterval& a, unsigned long e) {
  ComplexInterval result = ComplexInterval::from_q(1, a.prec());
  ComplexInterval base = a;
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Interval abs2(const ComplexInterval& a) { return sqr(a.re) + sqr(a.im); }

Interval abs(const ComplexInterval& a) { return sqrt(abs2(a)); }

bool overlaps(const ComplexInterval& a, const ComplexInterval& b) {
  return overlaps(a.re, b.re) && overlaps(a.im, b.im);
}

}  // namespace lrs
