#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace lrs {

/// "p/q", an integer, or a decimal such as "0.05" or "2.5e-3", read exactly.
/// Throws DomainError on anything else.
mpq_class parse_rational(const std::string& text);

/// Comma separated integers, e.g. "1,-1,2".
std::vector<mpz_class> parse_int_list(const std::string& text);

/// Flat key=value lines; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);

}  // namespace lrs
