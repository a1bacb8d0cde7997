#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bergman/disc.hpp"

namespace bergman {

/// Marker for a quantity that diverges; never stored as a floating infinity.
struct Divergent {
  friend bool operator==(Divergent, Divergent) = default;
};

/// Upper bound the observed value must not exceed (up to the tolerance).
struct BoundValue {
  double value;
  friend bool operator==(BoundValue, BoundValue) = default;
};

using ParamValue = std::variant<bool, std::int64_t, double, cplx, std::string>;
using Observed = std::variant<double, cplx, Divergent>;
using Expected = std::variant<std::monostate, double, cplx, BoundValue>;

/// Result of one numerical verification.
///
/// pass is derived on construction:
///   expected value  -> |observed - expected| <= tolerance
///   expected bound  -> observed <= bound + tolerance
///   no expectation  -> observed is finite (not Divergent)
/// A Divergent observation never passes against a value or bound.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, ParamValue>> params;
  Observed observed = 0.0;
  Expected expected;
  double tolerance = 0.0;
  bool pass = false;
  std::string resolution;  // rule size "64x256", or "exact" for coefficient arithmetic

  static CheckReport make(std::string name, std::vector<std::pair<std::string, ParamValue>> params,
                          Observed observed, Expected expected, double tolerance, std::string resolution);

  // |observed - expected|, or observed - bound; DBL_MAX when divergent.
  double deviation() const;
};

bool evaluate_pass(const Observed& observed, const Expected& expected, double tolerance);

}  // namespace bergman
