#pragma once

// The number field K = Q[x]/(h) for a monic irreducible integer polynomial h,
// elements represented as rational polynomials of degree < deg h in the
// primitive element gamma. The rationals are modelled as h = x - 1 (gamma = 1).

#include "lrs/interval.hpp"
#include "lrs/rational_poly.hpp"
#include "lrs/roots.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace lrs {

using Elem = RationalPoly;

class NumberField {
public:
  /// h must be monic with integer coefficients and irreducible over Q.
  explicit NumberField(RationalPoly h);
  static NumberField rationals() { return NumberField(RationalPoly{-1, 1}); }

  const RationalPoly& modulus() const { return h_; }
  int degree() const { return h_.degree(); }
  bool is_rational_field() const { return degree() == 1; }

  Elem from_q(const mpq_class& q) const;
  Elem gamma() const;
  Elem reduce(const RationalPoly& p) const { return p % h_; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % h_; }
  Elem neg(const Elem& a) const { return -a; }
  /// Throws DomainError on zero.
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, unsigned long e) const;
  /// The rational value of a when a lies in Q, else false.
  bool as_rational(const Elem& a, mpq_class& out) const;

  /// Characteristic polynomial of multiplication by a (degree d, monic).
  RationalPoly charpoly(const Elem& a) const;
  /// Minimal polynomial over Q (monic).
  RationalPoly minpoly(const Elem& a) const;
  mpq_class norm(const Elem& a) const;
  mpq_class trace(const Elem& a) const;
  /// a is an algebraic integer iff its characteristic polynomial is integral.
  bool is_integral(const Elem& a) const;

  /// Certified roots of h with enclosures accurate to at least `bits` bits.
  /// Index 0 is the designated identity embedding. Thread safe.
  std::shared_ptr<const RootSet> roots(Prec bits = 64) const;
  std::size_t embedding_count() const { return static_cast<std::size_t>(degree()); }
  bool embedding_is_real(std::size_t k) const { return roots()->is_real(k); }
  std::size_t conjugate_embedding(std::size_t k) const { return roots()->conjugate(k); }
  /// Enclosure of sigma_k(a), evaluated with root enclosures of `bits` bits at
  /// working precision bits + 32.
  ComplexInterval embed(const Elem& a, std::size_t k, Prec bits = 64) const;
  /// Enclosure of sigma_k(a) whose relative width is below 2^-bits (absolute
  /// width when sigma_k(a) = 0 cannot be excluded). Throws PrecisionError past
  /// the cap.
  ComplexInterval embed_accurate(const Elem& a, std::size_t k, Prec bits) const;

private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const RootSet> roots;
  };
  RationalPoly h_;
  std::shared_ptr<Cache> cache_;
};

/// Polynomials over K, coefficients lowest degree first, no zero leading entry.
using KPoly = std::vector<Elem>;

int kdegree(const KPoly& f);
void knormalize(KPoly& f);
KPoly kfrom_rational(const RationalPoly& p);
KPoly kadd(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly ksub(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly kmul(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly kscale(const NumberField& K, const KPoly& a, const Elem& s);
std::pair<KPoly, KPoly> kdivmod(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly kmonic(const NumberField& K, const KPoly& a);
KPoly kgcd(const NumberField& K, const KPoly& a, const KPoly& b);
Elem keval(const NumberField& K, const KPoly& f, const Elem& x);
/// f(x + c).
KPoly kshift(const NumberField& K, const KPoly& f, const Elem& c);
/// Map every coefficient c(gamma) to c(image) for an element `image` of L.
KPoly kmap(const NumberField& L, const KPoly& f, const Elem& image);
Elem map_elem(const NumberField& L, const Elem& a, const Elem& image);

/// Norm_{K(x)/Q(x)} of f(x - k*gamma), by interpolation.
RationalPoly knorm_shifted(const NumberField& K, const KPoly& f, long k);

struct TragerFactor {
  KPoly factor;        // monic irreducible over K
  RationalPoly norm;   // irreducible over Q: minimal polynomial of theta + k*gamma
  long shift = 0;      // k
};

/// Irreducible factors over K of a monic squarefree f in K[x].
std::vector<TragerFactor> factor_over_field(const NumberField& K, const KPoly& f);

}  // namespace lrs
