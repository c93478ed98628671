#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace lrs {

/// q^e for e >= 0.
inline mpq_class pow_q(const mpq_class& q, unsigned long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline mpz_class pow_z(const mpz_class& z, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never has a zero leading entry; the zero polynomial
/// has no coefficients and degree -1.
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);
  RationalPoly(std::initializer_list<long> coeffs);

  static RationalPoly constant(const mpq_class& c);
  static RationalPoly monomial(const mpq_class& c, int degree);
  static RationalPoly x() { return monomial(1, 1); }
  static RationalPoly from_integers(const std::vector<mpz_class>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  mpq_class coeff(int i) const;
  const mpq_class& lead() const { return c_.back(); }

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const mpq_class& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const mpq_class& s) { return a *= s; }
  friend RationalPoly operator-(RationalPoly a) { return a *= mpq_class(-1); }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  /// Exact quotient; remainder is discarded.
  friend RationalPoly operator/(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator%(const RationalPoly& a, const RationalPoly& b);

  RationalPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  /// this(g(x)).
  RationalPoly compose(const RationalPoly& g) const;
  /// this(x + t).
  RationalPoly shift(const mpq_class& t) const;
  RationalPoly monic() const;
  bool is_monic_integral() const;
  bool has_integer_coeffs() const;

  std::string to_string(const std::string& var = "x") const;

private:
  void normalize();
  std::vector<mpq_class> c_;
};

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic gcd (zero if both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct XgcdResult {
  RationalPoly g, s, t;
};
XgcdResult xgcd(const RationalPoly& a, const RationalPoly& b);
mpq_class resultant(const RationalPoly& a, const RationalPoly& b);
/// (-1)^{n(n-1)/2} Res(p, p') / lc(p); requires degree >= 1.
mpq_class discriminant(const RationalPoly& p);
/// Yun's decomposition of a nonzero polynomial into (squarefree part, exponent)
/// pairs with pairwise coprime monic parts; exponents strictly increasing.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p);
bool is_squarefree(const RationalPoly& p);

/// Integer polynomial helpers (coefficients lowest degree first).
using ZPoly = std::vector<mpz_class>;
mpz_class content(const ZPoly& p);
/// Scale a rational polynomial to a primitive integer polynomial with positive
/// leading coefficient; returns (unit, primitive) with p = unit * primitive.
std::pair<mpq_class, ZPoly> primitive_part(const RationalPoly& p);
RationalPoly to_rational(const ZPoly& p);

}  // namespace lrs
