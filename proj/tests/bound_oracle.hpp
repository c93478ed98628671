#pragma once

#include "lrs/bounds.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace oracle {

/// Exact inputs behind a GrowthParams, so the reference side never touches
/// the library's intervals.
struct ParamTuple {
  std::size_t l = 2, s = 2;
  int m = 2, a = 1, d = 2;
  mpq_class A = 2, A_prime = 1, alpha1 = 2;
  mpz_class rho = 1, disc = 5;

  lrs::GrowthParams params(lrs::Prec prec = 256) const {
    lrs::GrowthParams p;
    p.l = l;
    p.m = m;
    p.a = a;
    p.d = d;
    p.s = s;
    p.A = lrs::Interval::from_q(A, prec);
    p.A_prime = lrs::Interval::from_q(A_prime, prec);
    p.alpha1_abs = lrs::Interval::from_q(alpha1, prec);
    p.rho = rho;
    p.disc_bound = disc;
    return p;
  }
};

inline ParamTuple random_tuple(std::mt19937_64& rng) {
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  ParamTuple t;
  t.l = static_cast<std::size_t>(pick(2, 7));
  t.m = static_cast<int>(pick(2, static_cast<long>(t.l)));
  t.a = static_cast<int>(pick(1, std::min<long>(3, static_cast<long>(t.l) - t.m + 1)));
  t.d = static_cast<int>(pick(1, 12));
  t.s = static_cast<std::size_t>(pick(t.d > 1 ? 2 : 1, 3 * t.d + 2));
  t.A = frac(pick(100, 5000), 100);
  t.A_prime = pick(0, 2) == 0 ? mpq_class(1) : frac(pick(1, 99), 100);
  t.alpha1 = frac(pick(101, 900), 100);
  t.rho = pick(0, 1) == 0 ? 1 : pick(2, 60);
  t.disc = pick(1, 100000);
  return t;
}

/// a <= b, or both enclose the same value.
inline bool summand_le(const lrs::LogScale& a, const lrs::LogScale& b) {
  if (lrs::certainly_le(a, b)) return true;
  if (a.may_be_zero() || b.may_be_zero()) return false;
  return lo(a.ln()) == lo(b.ln()) && hi(a.ln()) == hi(b.ln());
}

/// Monotonicity is compared at this precision: ln tau sits near g(x), up to
/// ~1e70, and must still resolve an O(1) shift.
constexpr lrs::Prec kMonotonePrec = 1024;

inline lrs::GrowthBound fine_bound(const ParamTuple& t, const mpq_class& eps) {
  return lrs::growth_bound(t.params(kMonotonePrec), eps, kMonotonePrec);
}

/// The total is increasing in each summand, so a <= b follows from the
/// summands when the totals agree to more digits than the intervals carry.
inline bool bound_le(const lrs::GrowthBound& a, const lrs::GrowthBound& b) {
  if (lrs::certainly_le(a.total, b.total)) return true;
  return summand_le(a.rho_term, b.rho_term) && summand_le(a.tau.headline(), b.tau.headline()) &&
         summand_le(a.equations, b.equations) && summand_le(a.schmidt, b.schmidt);
}

inline Dec neg_inf() { return -std::numeric_limits<Dec>::infinity(); }

/// ln(sum exp(x_i)).
inline Dec log_sum_exp(const std::vector<Dec>& xs) {
  Dec top = neg_inf();
  for (const auto& x : xs) top = std::max(top, x);
  if (isinf(top)) return top;
  Dec s = 0;
  for (const auto& x : xs) {
    if (!isinf(x)) s += exp(x - top);
  }
  return top + log(s);
}

inline Dec ln_q(const mpq_class& q) { return log(dec(q)); }

inline Dec ln_factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return log(dec(f));
}

/// 2^{34+11l} s^2 l^12 x^{-5} as an exact rational built from cpp_int.
inline Dec g_value(const mpq_class& x, std::size_t l, std::size_t s) {
  BigInt num = BigInt(1) << (34 + 11 * l);
  num *= BigInt(s) * s;
  num *= boost::multiprecision::pow(BigInt(l), 12);
  const BigInt xn = big(x.get_num()), xd = big(x.get_den());
  return dec(num * boost::multiprecision::pow(xd, 5)) / dec(boost::multiprecision::pow(xn, 5));
}

struct TauRef {
  Dec t1, t2_eps, t2_x, t3;
  Dec headline() const { return std::max({t1, t2_eps, t2_x, t3}); }
};

/// ln of each threshold term.
inline TauRef tau_ref(const ParamTuple& t, const mpq_class& x, const mpq_class& eps) {
  TauRef r;
  const Dec lnA = ln_q(t.A), lnAp = ln_q(t.A_prime), L = ln_q(t.alpha1);
  r.t1 = log(Dec(20)) + Dec(t.l) * log(Dec(t.a)) + Dec(t.l) * lnA - lnAp;
  if (t.A_prime == 1) {
    r.t2_eps = r.t2_x = neg_inf();
  } else {
    r.t2_eps = log(-lnAp) - log(dec(eps) * L);
    r.t2_x = log(-lnAp) - log(dec(x) * L);
  }
  const Dec g = g_value(x, t.l, t.s);
  const Dec c = ln_factorial(t.l) * log(Dec(2 * t.d) * dec(t.disc));
  // ln(11 m A + e^g c) = g + ln(c + 11 m A e^{-g}).
  r.t3 = g + log(c + Dec(11 * t.m) * dec(t.A) * exp(-g)) - log(dec(x) * L);
  return r;
}

inline Dec equation_count_ref(int d, std::size_t l, std::size_t s, const mpq_class& eps, unsigned extra) {
  const BigInt inner_num = BigInt(d) * d * boost::multiprecision::pow(BigInt(l), 7) * (BigInt(1) << (4 * l + 19 + extra));
  const Dec inner = dec(inner_num) * dec(eps.get_den()) * dec(eps.get_den()) / (dec(eps.get_num()) * dec(eps.get_num()));
  return log(Dec(2 * s * s)) + Dec(l * s + l) * log(inner);
}

inline BigInt schmidt_exponent_ref(std::size_t k, int a) {
  const BigInt ka = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(a));
  return boost::multiprecision::pow(7 * ka, static_cast<unsigned>(8 * ka));
}

/// ln of the full growth bound, rebuilt from the closed forms.
inline Dec growth_bound_ref(const ParamTuple& t, const mpq_class& eps) {
  const bool one = t.rho == 1;
  const mpq_class x = eps / (one ? 2 * t.d : 4 * t.d);
  const Dec tau = tau_ref(t, x, eps).headline();
  const Dec rho_term = one ? neg_inf() : log(Dec(2) / dec(eps) * log(dec(t.rho)) / ln_q(t.alpha1));
  const Dec tail = equation_count_ref(t.d, t.l, t.s, eps, one ? 0 : 2) + dec(schmidt_exponent_ref(t.l, t.a));
  return log_sum_exp({rho_term, tau, tail});
}

}  // namespace oracle
