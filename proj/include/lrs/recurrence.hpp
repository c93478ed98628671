#pragma once

#include "lrs/rational_poly.hpp"

#include <string>
#include <vector>

namespace lrs {

/// u_{n+l} = a_1 u_{n+l-1} + ... + a_l u_n with integer coefficients and
/// initial values u_0..u_{l-1}. Order 0 (no coefficients) is the zero sequence.
struct RecurrenceSpec {
  std::vector<mpz_class> coeffs;    // a_1..a_l
  std::vector<mpz_class> initials;  // u_0..u_{l-1}

  std::size_t order() const { return coeffs.size(); }
  /// x^l - a_1 x^{l-1} - ... - a_l.
  RationalPoly characteristic_polynomial() const;
  std::string to_string() const;
  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Throws DomainError unless l >= 1, sizes agree and a_l != 0.
void validate(const RecurrenceSpec& spec);

struct MinimalRecurrence {
  RecurrenceSpec spec;
  bool reduced = false;        // order dropped
  bool zero_sequence = false;  // every term vanishes; spec has order 0
};

/// Shortest recurrence satisfied by the sequence, found by Berlekamp-Massey
/// over Q on the first 2l terms. The result always has integer coefficients
/// because a monic rational divisor of a monic integer polynomial is integral.
MinimalRecurrence minimal_recurrence(const RecurrenceSpec& spec);

/// u_n by direct iteration.
mpz_class u_eval(const RecurrenceSpec& spec, std::uint64_t n);
/// u_0..u_{count-1}.
std::vector<mpz_class> u_terms(const RecurrenceSpec& spec, std::size_t count);
/// State window (u_n, ..., u_{n+l-1}) via powers of the companion matrix.
std::vector<mpz_class> state_at(const RecurrenceSpec& spec, std::uint64_t n);
/// Advance a state window by one step in place.
void step_state(const RecurrenceSpec& spec, std::vector<mpz_class>& window);

}  // namespace lrs
