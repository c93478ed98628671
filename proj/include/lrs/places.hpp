#pragma once

// Places of a number field K = Q(gamma) and their normalized absolute values:
//   real embedding sigma:     |x|_v = |sigma(x)|^{1/d}
//   complex pair sigma:       |x|_v = |sigma(x)|^{2/d}
//   prime ideal P above q:    |x|_v = N(P)^{-ord_P(x)/d}
//
// Prime ideals are found through Dedekind's criterion: when Z[gamma] is
// q-maximal the primes above q correspond to the irreducible factors g_j^e_j
// of h mod q, and ord_P is read off the q-adic factor lifting g_j^e_j.

#include "lrs/modp.hpp"
#include "lrs/number_field.hpp"

#include <optional>
#include <vector>

namespace lrs {

struct Place {
  enum class Kind { Real, Complex, Finite };
  Kind kind = Kind::Real;
  std::size_t embedding = 0;  // archimedean: representative embedding index
  mpz_class prime = 0;        // finite: rational prime below
  std::size_t ideal = 0;      // finite: index of the factor of h mod q
  int ramification = 0;       // finite: e
  int residue_degree = 0;     // finite: f, N(P) = q^f
  mpq_class weight = 0;       // s(v)

  bool archimedean() const { return kind != Kind::Finite; }
  std::string to_string() const;
};

std::vector<Place> archimedean_places(const NumberField& K);
/// Sum of s(v) over archimedean places; 1 for every field.
mpq_class weight_sum(const NumberField& K);

struct PrimeIdeal {
  modp::Poly factor;  // g_j mod q, monic irreducible
  int e = 0, f = 0;
};

struct PrimeDecomposition {
  mpz_class q;
  /// Z[gamma] is q-maximal: the ideals below are exactly the primes above q.
  bool regular = false;
  std::vector<PrimeIdeal> ideals;  // factors of h mod q in any case
};

/// Throws CapacityError when q does not fit a machine word.
PrimeDecomposition decompose_prime(const NumberField& K, const mpz_class& q);

std::vector<Place> finite_places(const PrimeDecomposition& dec);

/// ord_P(x) for the j-th ideal of a regular decomposition. Throws
/// UnavailableError for non-regular primes, DomainError for x = 0.
long valuation_at(const NumberField& K, const PrimeDecomposition& dec, std::size_t j, const Elem& x);

/// |x|_v for a finite place, as q^exponent with exponent = -f * ord / d.
struct FiniteAbs {
  mpz_class q;
  mpq_class exponent;
  std::optional<mpq_class> rational() const;
  Interval log(Prec prec) const;
};

FiniteAbs abs_finite(const NumberField& K, const PrimeDecomposition& dec, std::size_t j, const Elem& x);
/// ln |x|_v for an archimedean place, with relative accuracy about 2^-bits.
Interval log_abs_archimedean(const NumberField& K, const Place& v, const Elem& x, Prec bits);
/// |x|_v for an archimedean place.
Interval abs_archimedean(const NumberField& K, const Place& v, const Elem& x, Prec bits);

struct SSet {
  std::vector<Place> places;  // archimedean first, then explicit finite places
  /// Rational primes whose places above could not be enumerated exactly; each
  /// contributes d to s as an upper bound.
  std::vector<mpz_class> bounded_primes;
  std::size_t s = 0;
  bool exact() const { return bounded_primes.empty(); }
};

/// All archimedean places plus the places above every rational prime dividing
/// some N(alpha_i). Inputs must be algebraic integers.
SSet build_s_set(const NumberField& K, const std::vector<Elem>& roots);

/// ln H(X) for a nonzero vector, over all places. Throws UnavailableError
/// when a relevant prime cannot be handled exactly.
Interval log_height(const NumberField& K, const std::vector<Elem>& X, Prec bits = 128);
Interval height(const NumberField& K, const std::vector<Elem>& X, Prec bits = 128);

struct ProductFormulaResult {
  Interval value;                 // encloses prod_v |x|_v
  std::size_t explicit_places = 0;  // finite places evaluated one by one
  std::size_t grouped_primes = 0;   // primes handled through the norm
  bool unfactored_cofactor = false; // part of the norm left unfactored
};

/// Encloses prod_v |x|_v. Finite places above regular word-size primes are
/// evaluated individually; the remaining primes are grouped by the identity
/// prod_{P | q} |x|_P = q^{-v_q(N(x))/d}.
ProductFormulaResult product_formula_residual(const NumberField& K, const Elem& x, Prec bits = 128);

}  // namespace lrs
