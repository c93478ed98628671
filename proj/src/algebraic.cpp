#include "lrs/algebraic.hpp"

#include "lrs/errors.hpp"
#include "lrs/intfactor.hpp"

namespace lrs {

std::vector<std::size_t> conjugate_roots(const NumberField& K, const std::vector<Elem>& roots) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> conj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Prec bits = 64;; bits *= 2) {
      if (bits > (1 << 16)) throw PrecisionError("could not match complex conjugate roots");
      ComplexInterval c = lrs::conj(K.embed(roots[i], 0, bits));
      std::size_t hits = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (overlaps(c, K.embed(roots[j], 0, bits))) {
          conj[i] = j;
          ++hits;
        }
      }
      if (hits == 1) break;
      if (hits == 0) throw InternalError("root set is not closed under complex conjugation");
    }
  }
  return conj;
}

std::vector<Elem> squared_moduli(const NumberField& K, const std::vector<Elem>& roots) {
  std::vector<std::size_t> conj = conjugate_roots(K, roots);
  std::vector<Elem> out;
  for (std::size_t i = 0; i < roots.size(); ++i) out.push_back(K.mul(roots[i], roots[conj[i]]));
  return out;
}

int compare_real(const NumberField& K, const Elem& a, const Elem& b) {
  if (a == b) return 0;
  const Elem diff = K.sub(a, b);
  for (Prec bits = 64;; bits *= 2) {
    if (bits > (1 << 16)) throw PrecisionError("could not separate distinct real numbers");
    Interval v = K.embed(diff, 0, bits).re;
    if (v.is_positive()) return 1;
    if (v.is_negative()) return -1;
  }
}

std::optional<RationalPower> rational_power(const NumberField& K, const Elem& x) {
  const unsigned long d = static_cast<unsigned long>(K.degree());
  const unsigned long cap = 2 * d * d;
  Elem p = x;
  mpq_class q;
  for (unsigned long t = 1; t <= cap; ++t) {
    if (K.as_rational(p, q)) return RationalPower{t, q};
    p = K.mul(p, x);
  }
  return std::nullopt;
}

std::optional<DegeneracyWitness> find_degeneracy(const NumberField& K, const std::vector<Elem>& roots) {
  if (roots.size() < 2) return std::nullopt;
  const std::vector<Elem> m2 = squared_moduli(K, roots);
  const unsigned long d = static_cast<unsigned long>(K.degree());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      // A root of unity has modulus 1 under every embedding, in particular the identity.
      if (m2[i] != m2[j]) continue;
      Elem ratio = K.div(roots[i], roots[j]);
      RationalPoly mp = K.minpoly(ratio);
      if (!mp.is_monic_integral()) continue;
      const std::uint64_t deg = static_cast<std::uint64_t>(mp.degree());
      Elem power = K.from_q(1);
      for (unsigned long k = 1; k <= 2 * d * d; ++k) {
        power = K.mul(power, ratio);
        if (euler_phi(k) == deg && power == K.from_q(1)) return DegeneracyWitness{i, j, ratio, k};
      }
    }
  }
  return std::nullopt;
}

DominantRoots dominant_roots(const NumberField& K, const std::vector<Elem>& roots) {
  if (roots.empty()) throw DomainError("dominant root of an empty root list");
  const std::vector<Elem> m2 = squared_moduli(K, roots);
  DominantRoots out;
  out.indices = {0};
  for (std::size_t i = 1; i < roots.size(); ++i) {
    int c = compare_real(K, m2[i], m2[out.indices.front()]);
    if (c > 0) out.indices = {i};
    if (c == 0) out.indices.push_back(i);
  }
  out.modulus_sq = m2[out.indices.front()];
  if (compare_real(K, out.modulus_sq, K.from_q(1)) <= 0) {
    throw AssumptionViolation("dominant root modulus must exceed 1", "|alpha_1|^2 = " + K.embed(out.modulus_sq, 0).re.to_string(12));
  }
  return out;
}

Interval dominant_modulus(const NumberField& K, const Elem& modulus_sq, Prec bits) {
  return sqrt(K.embed_accurate(modulus_sq, 0, bits + 2).re);
}

}  // namespace lrs
