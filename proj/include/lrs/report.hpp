#pragma once

// Serialization of an Analysis. JSON objects use sorted keys and every
// inexact quantity is printed from a certified enclosure at fixed digits,
// so identical inputs give identical bytes.

#include "lrs/analyze.hpp"

#include <json.hpp>

#include <string>

namespace lrs {

nlohmann::json report_json(const Analysis& a);
std::string render_json(const nlohmann::json& j);
std::string render_text(const Analysis& a);

nlohmann::json error_json(const std::string& code, const std::string& message, const std::string& context);
std::string render_error_text(const std::string& code, const std::string& message, const std::string& context);

/// {"ln": upper bound of ln x to 30 significant digits}.
nlohmann::json ln_json(const LogScale& x);
/// {"lo": ..., "hi": ...} rounded outward to 30 significant digits.
nlohmann::json interval_json(const Interval& x);

}  // namespace lrs
