#pragma once

// Polynomials over the prime field F_p for word-size p (< 2^63), and their
// factorization: squarefree decomposition, distinct-degree split and
// Cantor-Zassenhaus equal-degree split.

#include "lrs/rational_poly.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lrs::modp {

using u64 = std::uint64_t;
/// Coefficients lowest degree first, each in [0, p); no trailing zeros.
using Poly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

int degree(const Poly& f);
void normalize(Poly& f);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 s, u64 p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(const Poly& a, const Poly& b, u64 p);
/// (g, s, t) with s*a + t*b = g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b, u64 p);
Poly derivative(const Poly& a, u64 p);
/// base^e mod m for an arbitrary-size exponent.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p);

/// Reduce a polynomial with p-integral rational coefficients mod p.
Poly reduce(const RationalPoly& f, u64 p);
Poly reduce(const ZPoly& f, u64 p);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

/// Full factorization of a nonzero polynomial; returns the leading
/// coefficient and monic irreducible factors sorted by (degree, coefficients).
std::pair<u64, std::vector<Factor>> factor(const Poly& f, u64 p, std::mt19937_64& rng);

/// Distinct-degree factorization of a squarefree monic polynomial: pairs
/// (product of all irreducible factors of degree i, i).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p);
/// Split a squarefree monic product of irreducibles of common degree `deg`.
std::vector<Poly> equal_degree(const Poly& f, int deg, u64 p, std::mt19937_64& rng);
bool is_squarefree(const Poly& f, u64 p);

}  // namespace lrs::modp
