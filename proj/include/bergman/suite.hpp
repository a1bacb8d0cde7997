#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bergman/report.hpp"

namespace bergman {

enum class OutputFormat { Json, Csv };

struct Resolution {
  int radial = 64;
  int angular = 256;
};

/// Parses "64x256".
Resolution parse_resolution(std::string_view text);

struct SuiteConfig {
  std::vector<std::string> checks;  // run in this order
  Resolution resolution;
  OutputFormat format = OutputFormat::Json;
  std::string output_path;          // empty: caller decides (stdout)
  std::uint64_t seed = 0;
  unsigned threads = 0;             // 0: hardware concurrency capped by BERGMAN_KIT_THREADS
};

/// Names accepted by run_check(), in the order `verify --all` runs them.
const std::vector<std::string>& available_checks();

/// Runs one named check. Throws Error(UnknownCheck) for unknown names.
std::vector<CheckReport> run_check(const std::string& name, const SuiteConfig& config);

/// Runs config.checks, possibly concurrently, handing every report to `sink`
/// in config order. Unknown names are rejected before anything runs.
/// Returns 0 when every report passes, 1 otherwise.
int run_suite(const SuiteConfig& config, const std::function<void(const CheckReport&)>& sink);

/// Worker count for the suite: hardware concurrency, capped by the positive
/// integer in BERGMAN_KIT_THREADS when set.
unsigned default_thread_count();

/// One JSON object per line, keys in the order
/// check, params, observed, expected, tol, pass. The resolution is the first
/// entry of params. Complex numbers are [re, im]; a bound expectation is
/// {"bound": v}; a divergent observation is the string "divergent".
std::string to_json_line(const CheckReport& report);

std::string csv_header();
/// Same fields as JSON; params flattened as key=value joined with ';'.
std::string to_csv_line(const CheckReport& report);

std::string format_report(const CheckReport& report, OutputFormat format);

}  // namespace bergman
