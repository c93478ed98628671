#pragma once

// End-to-end analysis of one recurrence. Everything that does not depend on
// eps (minimal form, splitting field, Binet form, S, A, A', rho) is computed
// once by prepare() and can be reused across several eps.

#include "lrs/algebraic.hpp"
#include "lrs/binet.hpp"
#include "lrs/bounds.hpp"
#include "lrs/verifier.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrs {

struct TermSummary {
  std::string min_poly;
  std::string root_approx;
  int multiplicity = 1;
  std::vector<std::string> coeffs;         // in the primitive element
  std::vector<std::string> coeffs_approx;  // identity embedding
};

struct Prepared {
  RecurrenceSpec input;
  MinimalRecurrence minimal;
  std::shared_ptr<const RootSystem> rs;
  std::string gamma_approx;  // identity embedding of the primitive element
  std::optional<DegeneracyWitness> degeneracy;
  std::string degeneracy_ratio;  // decimal image of the witness ratio
  BinetForm form;
  std::vector<TermSummary> terms;
  SSet S;
  mpz_class rho = 1;
  /// Absent only for forced degenerate input whose dominant modulus is not > 1.
  std::optional<GrowthParams> params;
  std::vector<std::string> warnings;

  const RecurrenceSpec& spec() const { return minimal.spec; }
  const NumberField& K() const { return rs->K(); }
};

/// Throws DegenerateError for the zero sequence, and for degenerate input
/// unless `force` is set; AssumptionViolation when |alpha_1| <= 1 (unless
/// forced degenerate); CapacityError past the degree cap.
Prepared prepare(const RecurrenceSpec& spec, bool force = false, int degree_cap = kDefaultDegreeCap);

struct Analysis {
  std::shared_ptr<const Prepared> prep;
  mpq_class eps;
  /// eps the growth bound is evaluated at: eps itself below 1/12, else 1/13.
  /// Solutions for eps are solutions for every smaller eps, so this still bounds them.
  mpq_class bound_eps;
  std::uint64_t n_max = 0;
  std::optional<GrowthBound> bound;
  std::optional<Interval> m1;
  std::vector<std::uint64_t> solutions;
  bool solutions_computed = false;
  std::vector<std::uint64_t> zeros;
  /// count <= bound (and, when m = 1, every solution below the closed form).
  std::optional<bool> verdict;
  std::optional<bool> verdict_m1;
  Prec max_precision = 0;
  std::size_t tie_tests = 0;
  VerifierConfig config;
  std::vector<std::string> warnings;
};

/// The eps the growth bound is evaluated at when the requested eps is >= 1/12.
inline mpq_class fallback_bound_eps() { return mpq_class(1, 13); }

/// Throws DomainError unless 0 < eps < 1.
Analysis analyze(std::shared_ptr<const Prepared> prep, const mpq_class& eps, std::uint64_t n_max, const VerifierConfig& cfg = {});

}  // namespace lrs
