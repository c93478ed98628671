#pragma once

// u_n = sum_i P_i(n) alpha_i^n over the splitting field, and the constants the
// growth bound is built from.

#include "lrs/factor.hpp"
#include "lrs/places.hpp"
#include "lrs/recurrence.hpp"
#include "lrs/splitting_field.hpp"

#include <vector>

namespace lrs {

/// Distinct characteristic roots inside their splitting field.
struct RootSystem {
  Factorization factorization;  // of the characteristic polynomial
  SplittingField field;
  std::vector<Elem> roots;
  std::vector<int> multiplicity;
  std::vector<std::size_t> factor_of;  // index into factorization.factors

  const NumberField& K() const { return field.field; }
};

/// Throws CapacityError when the splitting field degree exceeds `degree_cap`.
RootSystem root_system(const RecurrenceSpec& spec, int degree_cap = kDefaultDegreeCap);

struct BinetTerm {
  Elem root;
  int multiplicity = 1;
  std::vector<Elem> coeffs;  // P(n) = sum_k coeffs[k] n^k, k < multiplicity
};

struct BinetForm {
  std::vector<BinetTerm> terms;
  std::size_t l = 0;

  int m() const { return static_cast<int>(terms.size()); }
  int a() const;
};

/// Solves the confluent Vandermonde system exactly and checks the identity
/// for n = 0..2l. Throws InternalError if it fails.
BinetForm binet_decompose(const RecurrenceSpec& spec, const RootSystem& rs);

/// P_i(n) as a field element.
Elem binet_poly_at(const NumberField& K, const BinetTerm& t, std::uint64_t n);
/// sum_i P_i(n) alpha_i^n computed exactly in K.
Elem binet_eval(const NumberField& K, const BinetForm& form, std::uint64_t n);
/// Enclosure of the identity image of sum_i P_i(n) alpha_i^n computed from
/// root and coefficient enclosures (no exact powering).
ComplexInterval binet_enclosure(const NumberField& K, const BinetForm& form, std::uint64_t n, Prec bits);

/// Smallest n >= 1 with n * x an algebraic integer.
mpz_class integrality_denominator(const NumberField& K, const Elem& x);
/// lcm of integrality_denominator over all nonzero coefficients.
mpz_class compute_rho(const NumberField& K, const BinetForm& form);

struct CoefficientBounds {
  Interval A;        // max(1, |sigma(rho a_ij)|)
  Interval A_prime;  // min(1, |sigma(rho a_ij)|) over nonzero a_ij
};

/// Throws DomainError when every coefficient vanishes.
CoefficientBounds compute_A_Aprime(const NumberField& K, const BinetForm& form, const mpz_class& rho, Prec bits = 96);

struct GrowthParams {
  std::size_t l = 0;
  int m = 0, a = 0, d = 0;
  std::size_t s = 0;
  bool s_exact = true;
  Interval A, A_prime;
  mpz_class rho = 1;
  mpz_class disc_bound = 1;  // |disc(h)| >= |Delta_K|
  Interval alpha1_abs;
  Elem modulus_sq;  // |alpha_1|^2 in K
  std::vector<std::size_t> dominant;
};

/// Throws AssumptionViolation when |alpha_1| <= 1.
GrowthParams assemble_growth_params(const RootSystem& rs, const BinetForm& form, const SSet& S, const mpz_class& rho,
                                    const CoefficientBounds& bounds, Prec bits = 96);

}  // namespace lrs
