#pragma once

// Exact questions about characteristic roots inside the splitting field:
// complex conjugation, moduli, degeneracy and dominance. "Modulus" always
// refers to the identity embedding (embedding 0 of the field).

#include "lrs/number_field.hpp"

#include <optional>
#include <vector>

namespace lrs {

/// For each root, the index of the root whose identity image is the complex
/// conjugate of its identity image (roots must be closed under conjugation).
std::vector<std::size_t> conjugate_roots(const NumberField& K, const std::vector<Elem>& roots);

/// |alpha|^2 = alpha * conj(alpha) as exact field elements.
std::vector<Elem> squared_moduli(const NumberField& K, const std::vector<Elem>& roots);

/// Certified comparison of the identity images of two real field elements:
/// -1, 0 or 1. Equality is decided exactly.
int compare_real(const NumberField& K, const Elem& a, const Elem& b);

struct DegeneracyWitness {
  std::size_t i = 0, j = 0;  // root indices
  Elem ratio;                // alpha_i / alpha_j
  unsigned long order = 0;   // ratio^order = 1
};

/// A pair of distinct roots whose ratio is a root of unity, if any. Candidate
/// orders k range over k <= 2 d^2 with phi(k) equal to the degree of the
/// ratio's minimal polynomial.
std::optional<DegeneracyWitness> find_degeneracy(const NumberField& K, const std::vector<Elem>& roots);

struct DominantRoots {
  std::vector<std::size_t> indices;  // all roots of maximal modulus
  Elem modulus_sq;                   // |alpha_1|^2, a positive real element
  bool unique() const { return indices.size() == 1; }
};

/// Throws AssumptionViolation unless |alpha_1| > 1.
DominantRoots dominant_roots(const NumberField& K, const std::vector<Elem>& roots);

/// Enclosure of sqrt(sigma_0(modulus_sq)) with relative width below 2^-bits.
Interval dominant_modulus(const NumberField& K, const Elem& modulus_sq, Prec bits);

/// Smallest t >= 1 with x^t rational, among t <= 2 d^2 (enough for every
/// totally-equal-modulus element of a Galois field), with the value x^t.
struct RationalPower {
  unsigned long t;
  mpq_class value;
};
std::optional<RationalPower> rational_power(const NumberField& K, const Elem& x);

inline bool algebraic_is_integer(const NumberField& K, const Elem& x) { return K.is_integral(x); }

}  // namespace lrs
