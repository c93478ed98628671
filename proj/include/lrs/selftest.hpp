#pragma once

// Built-in property suites. Every suite is driven by a seeded generator, so a
// run is reproducible byte for byte.

#include "lrs/number_field.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lrs {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;
  bool passed() const { return cases > 0 && failures == 0; }
};

struct SelftestOptions {
  std::vector<std::string> suites;  // empty: all
  std::size_t samples = 0;          // 0: each suite's default
  std::uint64_t seed = 42;
};

const std::vector<std::string>& selftest_suite_names();

/// Q, Q(sqrt 5), Q(i) and the splitting field of x^3 - 2.
std::vector<std::pair<std::string, NumberField>> product_formula_fields();
/// Totally real fields: Q, Q(sqrt 5), Q(sqrt 2), the cyclic cubic x^3 - 3x + 1.
std::vector<std::pair<std::string, NumberField>> height_fields();

SuiteResult suite_product_formula(std::size_t samples, std::uint64_t seed);
SuiteResult suite_laplace(std::size_t samples, std::uint64_t seed);
SuiteResult suite_heights(std::size_t samples, std::uint64_t seed);
SuiteResult suite_growth(std::size_t samples, std::uint64_t seed);
SuiteResult suite_weights();

/// Throws DomainError for an unknown suite name.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);

std::string render_selftest_text(const std::vector<SuiteResult>& results);
nlohmann::json selftest_json(const std::vector<SuiteResult>& results, const SelftestOptions& opt);

}  // namespace lrs
