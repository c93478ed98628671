#include "lrs/recurrence.hpp"

#include "lrs/errors.hpp"

#include <sstream>

namespace lrs {

RationalPoly RecurrenceSpec::characteristic_polynomial() const {
  const std::size_t l = order();
  std::vector<mpq_class> c(l + 1);
  c[l] = 1;
  for (std::size_t i = 0; i < l; ++i) c[l - 1 - i] = -mpq_class(coeffs[i]);
  return RationalPoly(std::move(c));
}

std::string RecurrenceSpec::to_string() const {
  std::ostringstream os;
  os << "coeffs=";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i].get_str();
  os << " init=";
  for (std::size_t i = 0; i < initials.size(); ++i) os << (i ? "," : "") << initials[i].get_str();
  return os.str();
}

void validate(const RecurrenceSpec& spec) {
  if (spec.coeffs.empty()) throw DomainError("recurrence order must be at least 1");
  if (spec.coeffs.size() != spec.initials.size()) {
    throw DomainError("need exactly one initial value per coefficient", spec.to_string());
  }
  if (spec.coeffs.back() == 0) throw DomainError("last coefficient a_l must be nonzero", spec.to_string());
}

std::vector<mpz_class> u_terms(const RecurrenceSpec& spec, std::size_t count) {
  const std::size_t l = spec.order();
  std::vector<mpz_class> u;
  u.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n < l) {
      u.push_back(spec.initials[n]);
      continue;
    }
    mpz_class v = 0;
    for (std::size_t i = 0; i < l; ++i) v += spec.coeffs[i] * u[n - 1 - i];
    u.push_back(std::move(v));
  }
  return u;
}

mpz_class u_eval(const RecurrenceSpec& spec, std::uint64_t n) {
  const std::size_t l = spec.order();
  if (l == 0) return 0;
  if (n < l) return spec.initials[n];
  std::vector<mpz_class> w = spec.initials;
  for (std::uint64_t k = l; k <= n; ++k) step_state(spec, w);
  return w.back();
}

void step_state(const RecurrenceSpec& spec, std::vector<mpz_class>& window) {
  const std::size_t l = spec.order();
  mpz_class next = 0;
  for (std::size_t i = 0; i < l; ++i) next += spec.coeffs[i] * window[l - 1 - i];
  for (std::size_t i = 0; i + 1 < l; ++i) window[i].swap(window[i + 1]);
  window[l - 1].swap(next);
}

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

}  // namespace

std::vector<mpz_class> state_at(const RecurrenceSpec& spec, std::uint64_t n) {
  const std::size_t l = spec.order();
  if (l == 0) return {};
  // Companion matrix M with M * (u_n..u_{n+l-1})^T = (u_{n+1}..u_{n+l})^T.
  Matrix m(l, std::vector<mpz_class>(l, 0));
  for (std::size_t i = 0; i + 1 < l; ++i) m[i][i + 1] = 1;
  for (std::size_t i = 0; i < l; ++i) m[l - 1][l - 1 - i] = spec.coeffs[i];
  Matrix r(l, std::vector<mpz_class>(l, 0));
  for (std::size_t i = 0; i < l; ++i) r[i][i] = 1;
  for (std::uint64_t e = n; e; e >>= 1) {
    if (e & 1) r = matmul(r, m);
    if (e > 1) m = matmul(m, m);
  }
  std::vector<mpz_class> out(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) out[i] += r[i][j] * spec.initials[j];
  }
  return out;
}

MinimalRecurrence minimal_recurrence(const RecurrenceSpec& spec) {
  validate(spec);
  const std::size_t l = spec.order();
  const std::vector<mpz_class> s = u_terms(spec, 2 * l);

  // Berlekamp-Massey: connection polynomial C with sum_{i=0}^{L} c_i s_{n-i} = 0.
  std::vector<mpq_class> c{1}, b{1};
  std::size_t big_l = 0, shift = 1;
  mpq_class last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    mpq_class d = 0;
    for (std::size_t i = 0; i <= big_l && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    std::vector<mpq_class> t = c;
    mpq_class coef = d / last;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= coef * b[i];
    if (2 * big_l <= n) {
      big_l = n + 1 - big_l;
      b = std::move(t);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(big_l + 1, 0);

  MinimalRecurrence out;
  if (big_l == 0) {
    out.zero_sequence = true;
    out.reduced = true;
    return out;
  }
  if (c[big_l] == 0) throw InternalError("minimal recurrence has vanishing last coefficient", spec.to_string());
  RecurrenceSpec r;
  for (std::size_t i = 1; i <= big_l; ++i) {
    mpq_class a = -c[i];
    if (a.get_den() != 1) throw InternalError("minimal recurrence has non-integral coefficients", spec.to_string());
    r.coeffs.push_back(a.get_num());
  }
  r.initials.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(big_l));
  if (u_terms(r, 2 * l) != s) throw InternalError("minimal recurrence does not reproduce the sequence", spec.to_string());
  out.reduced = big_l < l;
  out.spec = big_l < l ? std::move(r) : spec;
  return out;
}

}  // namespace lrs
