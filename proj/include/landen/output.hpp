#pragma once

#include <string>

#include <json.hpp>

#include "landen/suites.hpp"

namespace landen {

// 17 significant digits; inf and nan as text.
std::string format_number(double v);
// Four significant figures in e-notation (8.655e-4); 0 and 1 stay bare.
std::string format_sig4(double v);

// Numbers are written with 17 significant digits; non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

nlohmann::ordered_json to_json(const ResidualReport& rep);
nlohmann::ordered_json to_json(const SuiteResult& res);

std::string csv_field(const std::string& s);
std::string suite_csv(const SuiteResult& res);
std::string suite_table(const SuiteResult& res);

}  // namespace landen
