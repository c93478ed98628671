#include "lrs/verifier.hpp"

#include "lrs/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

namespace lrs {

Prec default_precision_cap() {
  const char* env = std::getenv("LRS_GROWTH_PRECISION_CAP");
  if (env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 64) return static_cast<Prec>(v);
  }
  return 4096;
}

GrowthVerifier::GrowthVerifier(NumberField K, Elem modulus_sq, mpq_class eps, VerifierConfig cfg)
    : K_(std::move(K)), modulus_sq_(std::move(modulus_sq)), eps_(std::move(eps)), cfg_(cfg), state_(std::make_shared<State>()) {
  if (eps_ <= 0 || eps_ >= 1) throw DomainError("eps must lie in (0, 1)");
  if (cfg_.prec_start < 64 || cfg_.prec_cap < cfg_.prec_start) throw DomainError("need 64 <= precision start <= precision cap");
}

Interval GrowthVerifier::log_alpha1(Prec bits) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->log_alpha.find(bits);
    if (it != state_->log_alpha.end()) return it->second;
  }
  Interval v = log(dominant_modulus(K_, modulus_sq_, bits + 16));
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->log_alpha.emplace(bits, v);
  return v;
}

bool GrowthVerifier::exact_tie(const mpz_class& abs_u, std::uint64_t n) const {
  // |u| = |alpha_1|^{n(q-p)/q}  <=>  |u|^{2q} = M^{n(q-p)},  M = |alpha_1|^2.
  std::optional<RationalPower> rp;
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    ++state_->ties;
    if (state_->rational_power) rp = *state_->rational_power;
  }
  if (!rp) {
    // Not cached yet; computing twice under a race is harmless.
    std::lock_guard<std::mutex> lock(state_->mu);
    if (!state_->rational_power) state_->rational_power = rational_power(K_, modulus_sq_);
    rp = *state_->rational_power;
  }
  // No power of M is rational: M^N is irrational for every N >= 1.
  if (!rp) return false;
  const mpz_class p = eps_.get_num(), q = eps_.get_den();
  const mpz_class N = mpz_class(static_cast<unsigned long>(n)) * (q - p);
  if (!mpz_divisible_ui_p(N.get_mpz_t(), rp->t)) return false;
  const mpz_class k = N / rp->t;
  if (rp->value.get_den() != 1) return false;  // V^k with k >= 1 is not an integer
  const mpz_class V = rp->value.get_num();
  if (V <= 0) return false;
  // Cheap size filter before exponentiating.
  const double lhs_bits = 2.0 * q.get_d() * static_cast<double>(mpz_sizeinbase(abs_u.get_mpz_t(), 2));
  const double rhs_bits = k.get_d() * static_cast<double>(mpz_sizeinbase(V.get_mpz_t(), 2));
  if (std::abs(lhs_bits - rhs_bits) > 2.0 * q.get_d() + k.get_d() + 2) return false;
  return pow_z(abs_u, 2 * q.get_ui()) == pow_z(V, k.get_ui());
}

bool GrowthVerifier::is_solution(const mpz_class& u_n, std::uint64_t n) const {
  if (u_n == 0) return true;
  if (n == 0) return false;  // |u_0| >= 1 = |alpha_1|^0
  const mpz_class au = abs(u_n);
  const mpq_class e = mpq_class(mpz_class(static_cast<unsigned long>(n))) * (1 - eps_);
  bool tie_checked = false;
  for (Prec bits = cfg_.prec_start; bits <= cfg_.prec_cap; bits *= 2) {
    const Interval lhs = log(Interval::from_z(au, bits));
    const Interval rhs = mul_q(log_alpha1(bits), e);
    int verdict = certainly_lt(lhs, rhs) ? 1 : certainly_lt(rhs, lhs) ? 0 : -1;
    if (verdict >= 0) {
      std::lock_guard<std::mutex> lock(state_->mu);
      state_->max_prec = std::max(state_->max_prec, bits);
      return verdict == 1;
    }
    if (!tie_checked && bits >= 256) {
      tie_checked = true;
      if (exact_tie(au, n)) return false;
    }
  }
  if (!tie_checked && exact_tie(au, n)) return false;
  throw PrecisionError("comparison undecided at the precision cap",
                       "n=" + std::to_string(n) + " cap=" + std::to_string(cfg_.prec_cap) + " bits");
}

Prec GrowthVerifier::max_precision_used() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->max_prec;
}

std::size_t GrowthVerifier::tie_tests() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->ties;
}

namespace {

std::vector<std::uint64_t> scan_chunk(const RecurrenceSpec& spec, const GrowthVerifier& v, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint64_t> out;
  std::vector<mpz_class> window = state_at(spec, begin);
  for (std::uint64_t n = begin; n < end; ++n) {
    if (v.is_solution(window[0], n)) out.push_back(n);
    step_state(spec, window);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> enumerate_solutions(const RecurrenceSpec& spec, const GrowthVerifier& v, std::uint64_t n_max) {
  validate(spec);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, v.config().chunk);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t b = 0; b <= n_max; b += chunk) ranges.emplace_back(b, std::min<std::uint64_t>(n_max + 1, b + chunk));

  const unsigned threads = std::max(1u, v.config().threads ? v.config().threads : std::thread::hardware_concurrency());
  std::vector<std::vector<std::uint64_t>> parts(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); i += threads) {
    std::vector<std::future<std::vector<std::uint64_t>>> jobs;
    const std::size_t stop = std::min(ranges.size(), i + threads);
    for (std::size_t j = i + 1; j < stop; ++j) {
      jobs.push_back(std::async(std::launch::async, scan_chunk, std::cref(spec), std::cref(v), ranges[j].first, ranges[j].second));
    }
    parts[i] = scan_chunk(spec, v, ranges[i].first, ranges[i].second);
    for (std::size_t j = i + 1; j < stop; ++j) parts[j] = jobs[j - i - 1].get();
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::uint64_t> count_zeros(const RecurrenceSpec& spec, std::uint64_t n_max) {
  validate(spec);
  std::vector<std::uint64_t> out;
  std::vector<mpz_class> window = spec.initials;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (window[0] == 0) out.push_back(n);
    step_state(spec, window);
  }
  return out;
}

}  // namespace lrs
