#pragma once

// Randomised identity checks over the esp, symalg and polyzero layers,
// driven by a seed so every run is reproducible.

#include "esym/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace esym::cli {

inline constexpr std::size_t kMaxVerifyN = 12;

struct VerifyConfig {
  std::size_t max_n = 6;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
};

/// Computes eps_1..eps_n of an assignment. Defaults to the recurrence table;
/// tests substitute a broken one to exercise the failure path.
using TopRowFn = std::function<std::vector<ExactComplex>(std::span<const ExactComplex>)>;

struct VerifyHooks {
  TopRowFn top_row;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0; }
};

struct VerifyReport {
  std::vector<PropertyResult> properties;

  bool ok() const;
  const PropertyResult* find(std::string_view name) const;
};

/// Throws UsageError for max_n outside 1..kMaxVerifyN or zero trials.
VerifyReport run_verify(const VerifyConfig& config, const VerifyHooks& hooks = {});

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace esym::cli
