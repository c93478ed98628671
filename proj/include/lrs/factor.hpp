#pragma once

#include "lrs/modp.hpp"
#include "lrs/rational_poly.hpp"

#include <utility>
#include <vector>

namespace lrs {

struct Factorization {
  /// p = unit * prod(factor^multiplicity).
  mpq_class unit = 1;
  /// Irreducible, primitive integer polynomials with positive leading
  /// coefficient, sorted by (degree, coefficients).
  std::vector<std::pair<RationalPoly, int>> factors;

  RationalPoly expand() const;
};

/// Complete factorization over Q. Throws DomainError on the zero polynomial.
Factorization factor_rationals(const RationalPoly& p);

/// Irreducible factors of a squarefree primitive integer polynomial.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f);

struct ModFactorization {
  mpz_class prime;
  mpz_class lead;  // leading coefficient mod prime
  std::vector<modp::Factor> factors;
  std::size_t distinct() const { return factors.size(); }
};

/// Factorization over F_q of a polynomial with q-integral coefficients.
/// Throws DomainError when q is not prime or a denominator is divisible by q,
/// CapacityError when q does not fit a machine word.
ModFactorization factor_mod_prime(const RationalPoly& p, const mpz_class& q);

/// Lift f = lc(f) * prod(g_i) (mod p), g_i monic and pairwise coprime mod p, to
/// modulus p^k. Returns monic lifts with coefficients in [0, p^k).
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, modp::u64 p, unsigned k);

}  // namespace lrs
