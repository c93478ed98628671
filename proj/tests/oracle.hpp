#pragma once

// Reference arithmetic for the tests, deliberately built on boost.multiprecision
// rather than GMP/MPFR so that it shares no code with the library.

#include "lrs/interval.hpp"
#include "lrs/logscale.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

/// a/b in lowest terms; the two-argument mpq_class constructor does not reduce.
inline mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

inline BigInt big(const mpz_class& z) { return BigInt(z.get_str()); }
inline Dec dec(const BigInt& z) { return Dec(z.str()); }
inline Dec dec(const mpz_class& z) { return Dec(z.get_str()); }
inline Dec dec(const mpq_class& q) { return dec(q.get_num()) / dec(q.get_den()); }

inline Dec lo(const lrs::Interval& x) { return Dec(x.lo().to_string(60, MPFR_RNDD)); }
inline Dec hi(const lrs::Interval& x) { return Dec(x.hi().to_string(60, MPFR_RNDU)); }
inline Dec ln_lo(const lrs::LogScale& x) { return lo(x.ln()); }
inline Dec ln_hi(const lrs::LogScale& x) { return hi(x.ln()); }

/// x lies in the interval, up to the 60-digit decimal rendering of its ends.
inline bool encloses(const lrs::Interval& I, const Dec& x) {
  const Dec slack = abs(x) * Dec("1e-55") + Dec("1e-150");
  return lo(I) - slack <= x && x <= hi(I) + slack;
}

inline Dec rel_err(const Dec& got, const Dec& want) {
  return want == 0 ? abs(got) : abs(got - want) / abs(want);
}

/// ln|u| for a nonzero integer of any size, keeping the top 400 bits exact.
inline Dec ln_abs(BigInt u) {
  if (u < 0) u = -u;
  const unsigned bits = boost::multiprecision::msb(u) + 1;
  if (bits <= 400) return log(dec(u));
  const unsigned shift = bits - 400;
  const BigInt top = u >> shift;
  return log(dec(top)) + Dec(shift) * log(Dec(2));
}

struct BruteForce {
  std::vector<std::uint64_t> solutions;
  Dec closest;  // smallest |ln|u_n| - n(1-eps) ln|alpha_1|| over n >= 1
};

/// Every n <= n_max with |u_n| < |alpha_1|^{n(1-eps)}, by direct iteration of
/// the recurrence in cpp_int and 200-digit logarithms.
inline BruteForce brute_force(const std::vector<long>& coeffs, const std::vector<long>& init, const Dec& ln_alpha1, long eps_num,
                              long eps_den, std::uint64_t n_max) {
  BruteForce r;
  r.closest = Dec(1e9);
  std::vector<BigInt> w(init.begin(), init.end());
  const Dec slope = ln_alpha1 * Dec(eps_den - eps_num) / Dec(eps_den);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const BigInt u = w[0];
    const Dec rhs = slope * Dec(n);
    if (u == 0) {
      r.solutions.push_back(n);
    } else {
      const Dec diff = ln_abs(u) - rhs;
      if (n > 0 && abs(diff) < r.closest) r.closest = abs(diff);
      if (diff < 0) r.solutions.push_back(n);
    }
    BigInt next = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) next += coeffs[i] * w[w.size() - 1 - i];
    w.erase(w.begin());
    w.push_back(next);
  }
  return r;
}

inline Dec golden_ln() { return log((Dec(1) + sqrt(Dec(5))) / 2); }

}  // namespace oracle
