#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace lrs {

struct IntFactorization {
  std::vector<std::pair<mpz_class, unsigned>> primes;  // ascending
  /// Product of prime factors not found within the search budget (1 when complete).
  mpz_class cofactor = 1;
  bool complete() const { return cofactor == 1; }
};

/// Factor |n| (n != 0) by trial division and Pollard-Brent rho. `rho_budget`
/// bounds the rho iterations spent on each composite cofactor; 0 means no limit.
IntFactorization factor_integer(const mpz_class& n, std::uint64_t rho_budget = 0);

bool is_probable_prime(const mpz_class& n);

/// v_p(n) for n != 0.
unsigned valuation(const mpz_class& n, const mpz_class& p);

/// Euler's totient of a small positive integer.
std::uint64_t euler_phi(std::uint64_t k);

}  // namespace lrs
