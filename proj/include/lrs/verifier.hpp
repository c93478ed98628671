#pragma once

// Certified decision of |u_n| < |alpha_1|^{n(1-eps)} and enumeration of its
// solutions. Comparisons run in interval arithmetic with precision doubling;
// a comparison that cannot be separated triggers an exact tie test in the
// splitting field. Ties are not solutions (the inequality is strict).

#include "lrs/algebraic.hpp"
#include "lrs/recurrence.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace lrs {

struct VerifierConfig {
  Prec prec_start = 64;
  Prec prec_cap = 4096;
  std::uint64_t chunk = 2048;  // terms per enumeration task
  unsigned threads = 0;        // 0: hardware concurrency
};

/// Default cap, overridden by LRS_GROWTH_PRECISION_CAP when set.
Prec default_precision_cap();

class GrowthVerifier {
public:
  /// modulus_sq is |alpha_1|^2 as an element of K (certified > 1).
  GrowthVerifier(NumberField K, Elem modulus_sq, mpq_class eps, VerifierConfig cfg = {});

  bool is_solution(const mpz_class& u_n, std::uint64_t n) const;
  /// Highest precision any decision needed so far.
  Prec max_precision_used() const;
  std::size_t tie_tests() const;

  const mpq_class& eps() const { return eps_; }
  const VerifierConfig& config() const { return cfg_; }

private:
  Interval log_alpha1(Prec bits) const;
  bool exact_tie(const mpz_class& abs_u, std::uint64_t n) const;

  NumberField K_;
  Elem modulus_sq_;
  mpq_class eps_;
  VerifierConfig cfg_;
  struct State {
    std::mutex mu;
    std::map<Prec, Interval> log_alpha;
    std::optional<std::optional<RationalPower>> rational_power;
    Prec max_prec = 0;
    std::size_t ties = 0;
  };
  std::shared_ptr<State> state_;
};

/// All n in [0, n_max] solving the inequality, increasing. Work is split into
/// chunks started from exactly computed state windows; the result does not
/// depend on the chunking.
std::vector<std::uint64_t> enumerate_solutions(const RecurrenceSpec& spec, const GrowthVerifier& v, std::uint64_t n_max);

/// n in [0, n_max] with u_n = 0.
std::vector<std::uint64_t> count_zeros(const RecurrenceSpec& spec, std::uint64_t n_max);

}  // namespace lrs
