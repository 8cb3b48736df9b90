#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "landen/precision.hpp"

namespace landen {

enum class Status { pass, fail, skipped_pole, not_applicable };

const char* to_string(Status s);

// Absolute difference, relative once the reference exceeds 1 in magnitude.
template <class T>
double deviation(const T& value, const T& reference) {
  using std::abs;
  using std::max;
  T scale = max(T(1), abs(reference));
  return to_double(abs(value - reference) / scale);
}

// One way of reading a formula, with its worst residual over the samples.
struct Reading {
  std::string label;
  double residual = 0;
  bool holds = false;
};

struct ResidualReport {
  std::string id;
  std::vector<std::pair<std::string, double>> params;
  std::size_t samples = 0;
  std::size_t pole_skips = 0;
  double max_residual = 0;
  double tolerance = 0;
  Status status = Status::pass;
  std::vector<Reading> readings;
  std::string resolved;
  std::string note;

  bool passed() const { return status == Status::pass; }
  void add_param(std::string name, double v) { params.emplace_back(std::move(name), v); }
  void record(double residual) {
    ++samples;
    if (std::isnan(residual)) residual = INFINITY;
    max_residual = std::max(max_residual, residual);
  }
  void finish() {
    if (samples == 0 && pole_skips > 0) {
      status = Status::skipped_pole;
      return;
    }
    status = max_residual <= tolerance ? Status::pass : Status::fail;
  }
};

}  // namespace landen
