#include "lrs/parse.hpp"

#include "lrs/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace lrs {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

mpz_class parse_integer(const std::string& s, const std::string& what) {
  static const std::regex int_re(R"([+-]?\d+)");
  if (!std::regex_match(s, int_re)) throw DomainError("not an integer", what + "='" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  const std::string s = trim(text);
  static const std::regex frac_re(R"(([+-]?\d+)/(\d+))");
  static const std::regex dec_re(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (std::regex_match(s, m, frac_re)) {
    const mpz_class den(m[2].str(), 10);
    if (den == 0) throw DomainError("zero denominator", s);
    mpq_class q(parse_integer(m[1].str(), "numerator"), den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, dec_re) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string digits = m[2].str() + m[3].str();
    long exp10 = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      const std::string e = m[4].str();
      if (e.size() > 6) throw DomainError("exponent out of range", s);
      exp10 += std::stol(e);
    }
    mpz_class num(digits, 10), p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    mpq_class q = exp10 < 0 ? mpq_class(num, p10) : mpq_class(num * p10);
    q.canonicalize();
    return m[1].str() == "-" ? mpq_class(-q) : q;
  }
  throw DomainError("not a rational number", "'" + s + "'");
}

std::vector<mpz_class> parse_int_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(trim(item), "list entry"));
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line is not key=value", "line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    if (key.empty()) throw DomainError("config line has an empty key", "line " + std::to_string(lineno));
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read config file", path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace lrs
