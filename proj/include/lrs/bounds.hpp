#pragma once

// Effective constants of the growth theorem, evaluated in log scale with
// outward rounding. "log" is the natural logarithm throughout.

#include "lrs/binet.hpp"
#include "lrs/logscale.hpp"

namespace lrs {

constexpr std::size_t kMaxOrder = 16;
constexpr int kMaxMultiplicity = 4;

/// 2^{34} 2^{11l} s^2 l^{12} x^{-5}, exactly.
mpq_class g_exact(const mpq_class& x, std::size_t l, std::size_t s);
LogScale g_of(const mpq_class& x, std::size_t l, std::size_t s, Prec prec = kBoundPrecision);

struct TauTerms {
  mpq_class x, eps;
  LogScale t1;         // 20 a^l A^l / A'
  LogScale t2_eps;     // -log A' / (eps log|alpha_1|), the printed form
  LogScale t2_x;       // -log A' / (x log|alpha_1|)
  LogScale t3;         // (11 m A + e^{g(x)} log(l!) log(2 d |Delta|)) / (x log|alpha_1|)
  LogScale as_printed() const { return max(max(t1, t2_eps), t3); }
  /// The larger of both readings of the second term; the safe headline value.
  LogScale headline() const { return max(max(t1, max(t2_eps, t2_x)), t3); }
};

TauTerms tau_of(const mpq_class& x, const mpq_class& eps, const GrowthParams& p, Prec prec = kBoundPrecision);

/// (7k^a)^{8k^a} as an exact integer. Throws CapacityError past k <= 16, a <= 4.
mpz_class schmidt_exponent(std::size_t k, int a);
/// exp((7k^a)^{8k^a}).
LogScale schmidt_count(std::size_t k, int a, Prec prec = kBoundPrecision);

/// 2 s^2 (d^2 l^7 2^{4l+19+extra} eps^{-2})^{ls+l}; extra is 0 when rho = 1
/// and 2 otherwise.
LogScale equation_count(int d, std::size_t l, std::size_t s, const mpq_class& eps, unsigned extra, Prec prec = kBoundPrecision);

struct GrowthBound {
  bool rho_is_one = true;
  TauTerms tau;      // at eps/2d or eps/4d
  LogScale rho_term; // 2 eps^{-1} log rho / log|alpha_1| (zero when rho = 1)
  LogScale equations;
  LogScale schmidt;
  LogScale total;
};

/// Throws DomainError unless 0 < eps < 1/12.
GrowthBound growth_bound(const GrowthParams& p, const mpq_class& eps, Prec prec = kBoundPrecision);

/// max(2(aA+1)/A', -log A' / (eps log|alpha_1|)); requires m = 1.
Interval m1_bound(const GrowthParams& p, const mpq_class& eps, Prec prec = kBoundPrecision);

/// 2 s^2 (m^7 2^{4m+17} eps^{-2})^{ms+m}.
LogScale subspace_count(int m, std::size_t s, const mpq_class& eps, Prec prec = kBoundPrecision);
/// (64 e m^4 2^m eps^{-1})^{ms+m}.
LogScale cprime(int m, std::size_t s, const mpq_class& eps, Prec prec = kBoundPrecision);
/// 2^{11m+34} s^2 eps^{-4} m^{12}.
LogScale cdoubleprime(int m, std::size_t s, const mpq_class& eps, Prec prec = kBoundPrecision);

void require_eps(const mpq_class& eps);

}  // namespace lrs
