#pragma once

// Certified isolation of the complex roots of a squarefree rational polynomial.
//
// Approximations come from Aberth iteration in MPFR. Each approximation z_i is
// certified by an inclusion disc of radius n|p(z_i)| / |lc * prod_{j!=i}(z_i - z_j)|:
// the union of these discs contains every root, and each connected component
// holds as many roots as discs. Pairwise disjoint discs therefore isolate one
// root each. Radii are computed in interval arithmetic, so the certificate is
// rigorous.

#include "lrs/interval.hpp"
#include "lrs/rational_poly.hpp"

#include <vector>

namespace lrs {

class RootSet {
public:
  /// Isolate all roots of a squarefree polynomial of degree >= 1. Roots are
  /// ordered reals ascending, then non-real roots by (real part, imaginary part).
  static RootSet isolate(const RationalPoly& p, Prec prec = 64);

  /// Same roots, same order, with every enclosure radius below
  /// 2^-bits * max(1, |root|). Throws PrecisionError past the internal cap.
  RootSet refined(Prec bits) const;

  const RationalPoly& poly() const { return poly_; }
  std::size_t size() const { return centers_re_.size(); }
  bool is_real(std::size_t k) const { return real_[k]; }
  std::size_t real_count() const;
  /// Index of the complex conjugate root (k itself for real roots).
  std::size_t conjugate(std::size_t k) const { return conj_[k]; }
  /// Rectangle enclosing root k; the imaginary part is exactly 0 for real roots.
  ComplexInterval root(std::size_t k) const;
  /// Bits of accuracy guaranteed by the enclosures.
  Prec accuracy() const { return accuracy_; }

private:
  RootSet() = default;
  bool certify(Prec prec);

  RationalPoly poly_;
  std::vector<Float> centers_re_, centers_im_, radii_;
  std::vector<bool> real_;
  std::vector<std::size_t> conj_;
  Prec accuracy_ = 0;
};

}  // namespace lrs
