#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "landen/report.hpp"

namespace landen {

inline constexpr std::string_view suite_names[] = {"core",     "landen", "gauss", "complex",
                                                   "products", "cyclic", "sg",    "all"};
bool is_suite(std::string_view name);

struct SuiteOptions {
  std::uint64_t seed = 42;
  // Replaces every case's own threshold when set.
  std::optional<double> tolerance;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ResidualReport> cases;
  double worst_residual = 0;  // over cases that were evaluated
  bool pass = true;
  std::size_t failures() const;
};

// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& opt = {});

// Re-judges a pass/fail case against tol. A case that failed on one of its
// other readings stays failed.
void apply_tolerance(ResidualReport& rep, double tol);

// Transformed parameter of the Landen map; exact 0 and 1 at the end points.
double table1_entry(int p, double m);
inline constexpr double table1_default_m[] = {0,     0.25,   0.5,     0.75,     0.9,
                                              0.99,  0.999,  0.9999,  0.99999,  1};

}  // namespace landen
