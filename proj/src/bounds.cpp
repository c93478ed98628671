#include "lrs/bounds.hpp"

#include "lrs/errors.hpp"

namespace lrs {

namespace {

mpq_class two_pow(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return mpq_class(r);
}

mpq_class pow_ul(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return mpq_class(r);
}

Interval ln_q(const mpq_class& q, Prec prec) { return log(Interval::from_q(q, prec)); }

Interval log_alpha1(const GrowthParams& p, Prec prec) {
  Interval L = log(with_prec(p.alpha1_abs, prec));
  if (!L.is_positive()) throw PrecisionError("log|alpha_1| is not certified positive", p.alpha1_abs.to_string(30));
  return L;
}

LogScale neg_log_aprime(const GrowthParams& p, Prec prec) {
  Interval ap = with_prec(p.A_prime, prec);
  if (!ap.is_positive()) throw InternalError("A' is not certified positive");
  // A' <= 1, so -log A' >= 0; clip the rounding spill below zero.
  Interval v = -log(ap);
  if (v.lo().sign() < 0) mpfr_set_zero(v.lo().get(), 1);
  return LogScale::from_interval(v);
}

}  // namespace

void require_eps(const mpq_class& eps) {
  if (eps <= 0 || eps >= mpq_class(1, 12)) throw DomainError("eps must lie in (0, 1/12)", "eps=" + eps.get_str());
}

mpq_class g_exact(const mpq_class& x, std::size_t l, std::size_t s) {
  if (x <= 0) throw DomainError("g(x) needs x > 0");
  if (l < 1 || s < 1) throw DomainError("g(x) needs l, s >= 1");
  mpq_class g = two_pow(34 + 11 * l) * pow_ul(s, 2) * pow_ul(l, 12);
  g /= pow_q(x, 5);
  return g;
}

LogScale g_of(const mpq_class& x, std::size_t l, std::size_t s, Prec prec) { return LogScale::from_q(g_exact(x, l, s), prec); }

TauTerms tau_of(const mpq_class& x, const mpq_class& eps, const GrowthParams& p, Prec prec) {
  if (x <= 0 || eps <= 0) throw DomainError("tau needs x > 0 and eps > 0");
  TauTerms t;
  t.x = x;
  t.eps = eps;
  const unsigned long l = p.l;
  const LogScale A = LogScale::from_interval(with_prec(p.A, prec));
  const LogScale Ap = LogScale::from_interval(with_prec(p.A_prime, prec));
  const LogScale L = LogScale::from_interval(log_alpha1(p, prec));

  t.t1 = LogScale::from_q(20 * pow_ul(static_cast<unsigned long>(p.a), l), prec) * pow(A, l) / Ap;

  const LogScale nl = neg_log_aprime(p, prec);
  t.t2_eps = nl / (LogScale::from_q(eps, prec) * L);
  t.t2_x = nl / (LogScale::from_q(x, prec) * L);

  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), l);
  const LogScale log_fact = LogScale::from_interval(ln_q(mpq_class(fact), prec));
  const LogScale log_disc = LogScale::from_interval(ln_q(mpq_class(2 * p.d * p.disc_bound), prec));
  const LogScale eg = LogScale::exp_of(Interval::from_q(g_exact(x, p.l, p.s), prec));
  const LogScale num = LogScale::from_q(11 * p.m, prec) * A + eg * log_fact * log_disc;
  t.t3 = num / (LogScale::from_q(x, prec) * L);
  return t;
}

mpz_class schmidt_exponent(std::size_t k, int a) {
  if (k < 1 || a < 1) throw DomainError("Schmidt's constant needs k, a >= 1");
  if (k > kMaxOrder || a > kMaxMultiplicity) {
    throw CapacityError("Schmidt's constant is capped at k <= 16, a <= 4", "k=" + std::to_string(k) + " a=" + std::to_string(a));
  }
  mpz_class ka;
  mpz_ui_pow_ui(ka.get_mpz_t(), k, static_cast<unsigned long>(a));
  const mpz_class base = 7 * ka;
  const mpz_class e = 8 * ka;
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
  return r;
}

LogScale schmidt_count(std::size_t k, int a, Prec prec) { return LogScale::exp_of(Interval::from_z(schmidt_exponent(k, a), prec)); }

LogScale equation_count(int d, std::size_t l, std::size_t s, const mpq_class& eps, unsigned extra, Prec prec) {
  const unsigned long L = l;
  mpq_class inner = pow_ul(static_cast<unsigned long>(d), 2) * pow_ul(L, 7) * two_pow(4 * L + 19 + extra) / (eps * eps);
  mpq_class lead = 2 * pow_ul(s, 2);
  return LogScale::from_q(lead, prec) * pow(LogScale::from_q(inner, prec), mpq_class(static_cast<unsigned long>(L * s + L)));
}

GrowthBound growth_bound(const GrowthParams& p, const mpq_class& eps, Prec prec) {
  require_eps(eps);
  GrowthBound b;
  b.rho_is_one = p.rho == 1;
  b.schmidt = schmidt_count(p.l, p.a, prec);
  b.rho_term = LogScale::zero(prec);
  if (b.rho_is_one) {
    b.tau = tau_of(eps / (2 * p.d), eps, p, prec);
    b.equations = equation_count(p.d, p.l, p.s, eps, 0, prec);
  } else {
    b.tau = tau_of(eps / (4 * p.d), eps, p, prec);
    b.equations = equation_count(p.d, p.l, p.s, eps, 2, prec);
    const LogScale L = LogScale::from_interval(log_alpha1(p, prec));
    const LogScale lr = LogScale::from_interval(ln_q(mpq_class(p.rho), prec));
    b.rho_term = LogScale::from_q(2 / eps, prec) * lr / L;
  }
  b.total = b.rho_term + b.tau.headline() + b.equations * b.schmidt;
  return b;
}

Interval m1_bound(const GrowthParams& p, const mpq_class& eps, Prec prec) {
  if (p.m != 1) throw DomainError("the one-root bound needs m = 1");
  if (eps <= 0) throw DomainError("eps must be positive");
  const Interval A = with_prec(p.A, prec), Ap = with_prec(p.A_prime, prec);
  Interval first = (Interval::from_si(2, prec) * (Interval::from_si(p.a, prec) * A + Interval::from_si(1, prec))) / Ap;
  Interval second = neg_log_aprime(p, prec).value() / (Interval::from_q(eps, prec) * log_alpha1(p, prec));
  return max(first, second);
}

LogScale subspace_count(int m, std::size_t s, const mpq_class& eps, Prec prec) {
  if (m < 2 || s < 1) throw DomainError("subspace count needs m >= 2, s >= 1");
  require_eps(eps);
  const unsigned long M = static_cast<unsigned long>(m);
  mpq_class inner = pow_ul(M, 7) * two_pow(4 * M + 17) / (eps * eps);
  return LogScale::from_q(2 * pow_ul(s, 2), prec) * pow(LogScale::from_q(inner, prec), mpq_class(M * s + M));
}

LogScale cprime(int m, std::size_t s, const mpq_class& eps, Prec prec) {
  if (m < 2 || s < 1) throw DomainError("C' needs m >= 2, s >= 1");
  require_eps(eps);
  const unsigned long M = static_cast<unsigned long>(m);
  mpq_class inner = 64 * pow_ul(M, 4) * two_pow(M) / eps;
  // ln(e * inner) = 1 + ln(inner).
  LogScale base = LogScale::from_ln(Interval::from_si(1, prec) + ln_q(inner, prec));
  return pow(base, mpq_class(M * s + M));
}

LogScale cdoubleprime(int m, std::size_t s, const mpq_class& eps, Prec prec) {
  if (m < 2 || s < 1) throw DomainError("C'' needs m >= 2, s >= 1");
  require_eps(eps);
  const unsigned long M = static_cast<unsigned long>(m);
  mpq_class v = two_pow(11 * M + 34) * pow_ul(s, 2) * pow_ul(M, 12) / pow_q(eps, 4);
  return LogScale::from_q(v, prec);
}

}  // namespace lrs
