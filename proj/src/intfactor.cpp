#include "lrs/intfactor.hpp"

#include "lrs/errors.hpp"

#include <algorithm>
#include <map>

namespace lrs {

bool is_probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

unsigned valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw DomainError("valuation of zero");
  mpz_class t = n;
  unsigned v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t q = 2; q * q <= k; ++q) {
    if (k % q == 0) {
      while (k % q == 0) k /= q;
      result -= result / q;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

// One nontrivial factor of the odd composite n, or 0 if the budget ran out.
mpz_class brent_rho(const mpz_class& n, std::uint64_t budget) {
  std::uint64_t spent = 0;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t m = 64;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          f(y);
          mpz_class d = x - y;
          q = (q * abs(d)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
        spent += lim;
        if (budget && spent > budget) return 0;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        mpz_class d = x - ys;
        mpz_class dd = abs(d);
        mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    if (budget && spent > budget) return 0;
  }
}

void split(const mpz_class& n, std::uint64_t budget, std::map<mpz_class, unsigned>& found, mpz_class& cofactor) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    found[n] += 1;
    return;
  }
  mpz_class d = brent_rho(n, budget);
  if (d == 0) {
    cofactor *= n;
    return;
  }
  split(d, budget, found, cofactor);
  split(mpz_class(n / d), budget, found, cofactor);
}

}  // namespace

IntFactorization factor_integer(const mpz_class& n, std::uint64_t rho_budget) {
  if (n == 0) throw DomainError("factorization of zero");
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long q = 2; q < 10000 && m > 1; q += (q == 2 ? 1 : 2)) {
    if (q * q > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      m /= q;
      found[mpz_class(q)] += 1;
    }
  }
  IntFactorization out;
  mpz_class cof = 1;
  split(m, rho_budget, found, cof);
  for (auto& [p, e] : found) out.primes.emplace_back(p, e);
  out.cofactor = cof;
  return out;
}

}  // namespace lrs
