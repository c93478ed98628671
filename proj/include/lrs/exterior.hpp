#pragma once

// Exterior powers of K^m with coordinates indexed by p-subsets of {1..m} in
// lexicographic order, the star map, and the Laplace identities. The algebra
// is generic over an arithmetic policy (RationalArith or FieldArith) so the
// identities can be checked exactly in Q and in any number field.
//
// The second half evaluates |.|_v at a single place in a form that keeps exact
// quantities exact, which is what the norm inequalities need to be decided
// with certainty when they are tight.

#include "lrs/errors.hpp"
#include "lrs/places.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lrs {

struct RationalArith {
  using value_type = mpq_class;
  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return a / b; }
  mpq_class neg(const mpq_class& a) const { return -a; }
  bool is_zero(const mpq_class& a) const { return a == 0; }
};

struct FieldArith {
  const NumberField& K;
  using value_type = Elem;
  Elem zero() const { return {}; }
  Elem one() const { return K.from_q(1); }
  Elem add(const Elem& a, const Elem& b) const { return K.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return K.sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return K.mul(a, b); }
  Elem div(const Elem& a, const Elem& b) const { return K.div(a, b); }
  Elem neg(const Elem& a) const { return K.neg(a); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

/// All p-subsets of {0..m-1}, lexicographic.
std::vector<std::vector<int>> lex_subsets(int m, int p);

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
typename F::value_type determinant(const F& f, std::vector<Vec<F>> M) {
  const std::size_t n = M.size();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(M[p][c])) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      std::swap(M[p], M[c]);
      det = f.neg(det);
    }
    det = f.mul(det, M[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(M[r][c])) continue;
      auto t = f.div(M[r][c], M[c][c]);
      for (std::size_t k = c; k < n; ++k) M[r][k] = f.sub(M[r][k], f.mul(t, M[c][k]));
    }
  }
  return det;
}

template <class F>
typename F::value_type dot(const F& f, const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) throw DomainError("dot product of vectors of different length");
  auto s = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
  return s;
}

/// x_1 ^ ... ^ x_p: the p x p minors on every column subset, lexicographic.
template <class F>
Vec<F> wedge(const F& f, const std::vector<Vec<F>>& xs) {
  if (xs.empty()) throw DomainError("wedge of no vectors");
  const int m = static_cast<int>(xs[0].size());
  const int p = static_cast<int>(xs.size());
  if (p > m) throw DomainError("wedge of more vectors than the dimension");
  for (const auto& x : xs) {
    if (static_cast<int>(x.size()) != m) throw DomainError("wedge of vectors of different length");
  }
  Vec<F> out;
  for (const auto& cols : lex_subsets(m, p)) {
    std::vector<Vec<F>> minor(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) {
      for (int c : cols) minor[static_cast<std::size_t>(t)].push_back(xs[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]);
    }
    out.push_back(determinant(f, std::move(minor)));
  }
  return out;
}

/// (x_m, -x_{m-1}, ..., (-1)^{m-1} x_1).
template <class F>
Vec<F> star(const F& f, const Vec<F>& x) {
  const std::size_t m = x.size();
  Vec<F> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = j % 2 ? f.neg(x[m - 1 - j]) : x[m - 1 - j];
  return out;
}

/// (x_1^...^x_p).(y_1^...^y_p) - det(x_i.y_j).
template <class F>
typename F::value_type laplace_identity_residual(const F& f, const std::vector<Vec<F>>& xs, const std::vector<Vec<F>>& ys) {
  if (xs.size() != ys.size()) throw DomainError("Laplace identity needs p vectors on each side");
  const std::size_t p = xs.size();
  std::vector<Vec<F>> G(p, Vec<F>(p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) G[i][j] = dot(f, xs[i], ys[j]);
  }
  return f.sub(dot(f, wedge(f, xs), wedge(f, ys)), determinant(f, std::move(G)));
}

/// x_1.(x_2^...^x_m)^* - det(x_1, ..., x_m).
template <class F>
typename F::value_type laplace_extension_residual(const F& f, const std::vector<Vec<F>>& xs) {
  const std::size_t m = xs.size();
  if (m < 2 || xs[0].size() != m) throw DomainError("Laplace extension needs m vectors in dimension m >= 2");
  std::vector<Vec<F>> rest(xs.begin() + 1, xs.end());
  return f.sub(dot(f, xs[0], star(f, wedge(f, rest))), determinant(f, xs));
}

// ---------------------------------------------------------------------------
// Local sizes.

/// approx = weight * ln|sigma(z)| at a real embedding sigma; lets ties be
/// settled exactly by comparing sigma(z^2).
struct ArchWitness {
  const NumberField* K = nullptr;
  std::size_t embedding = 0;
  mpq_class weight;
  Elem z;
};

/// A positive real written as rational * q^exponent * exp(approx), or zero.
/// Products of exact parts stay exact; approx carries whatever is irrational.
struct Magnitude {
  bool zero = false;
  mpq_class rational = 1;
  mpz_class q = 1;
  mpq_class exponent = 0;
  std::optional<Interval> approx;
  std::optional<ArchWitness> witness;

  static Magnitude of_zero() {
    Magnitude m;
    m.zero = true;
    return m;
  }
  static Magnitude of_rational(const mpq_class& r);
  static Magnitude of_log(Interval ln);
  Interval log(Prec prec) const;
};

Magnitude operator*(const Magnitude& a, const Magnitude& b);
Magnitude pow(const Magnitude& a, long e);
/// Certified a <= b. Exact when neither side has an approximate part, or when
/// both approximate parts are witnessed at the same real place.
bool certainly_le(const Magnitude& a, const Magnitude& b);
/// Certified max: exact when both are exact, an enclosure otherwise.
Magnitude max(const Magnitude& a, const Magnitude& b);

/// |.|_v at one place of K.
class LocalNorm {
public:
  LocalNorm(const NumberField& K, Place v, std::shared_ptr<const PrimeDecomposition> dec = nullptr, Prec bits = 160);

  const Place& place() const { return v_; }
  mpq_class weight() const { return v_.weight; }
  Magnitude of(const Elem& x) const;
  /// max_i |x_i|_v.
  Magnitude of(const std::vector<Elem>& X) const;
  /// c^{s(v)} for a positive integer c.
  Magnitude weight_power(const mpz_class& c) const;

private:
  const NumberField* K_;
  Place v_;
  std::shared_ptr<const PrimeDecomposition> dec_;
  Prec bits_;
};

/// Every place of S(X) for a list of vectors: archimedean places plus the
/// finite places above primes dividing a coordinate's numerator norm or
/// denominator. Primes where Z[gamma] is not maximal are skipped.
std::vector<LocalNorm> places_for(const NumberField& K, const std::vector<std::vector<Elem>>& vectors, Prec bits = 160);

/// H(X) as a Magnitude: exact over Q, an enclosure otherwise.
Magnitude height_magnitude(const NumberField& K, const std::vector<Elem>& X, Prec bits = 160);

}  // namespace lrs
