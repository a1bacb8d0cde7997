#include "bergman/report.hpp"

#include <cmath>
#include <limits>

namespace bergman {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(const Observed& o) {
  return std::visit(overloaded{[](double v) { return std::isfinite(v); },
                               [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); },
                               [](Divergent) { return false; }},
                    o);
}

cplx as_complex(const Observed& o) {
  if (const auto* d = std::get_if<double>(&o)) return *d;
  return std::get<cplx>(o);
}

}  // namespace

bool evaluate_pass(const Observed& observed, const Expected& expected, double tolerance) {
  if (!finite(observed)) return false;
  return std::visit(overloaded{[](std::monostate) { return true; },
                               [&](double e) { return std::abs(as_complex(observed) - e) <= tolerance; },
                               [&](cplx e) { return std::abs(as_complex(observed) - e) <= tolerance; },
                               [&](BoundValue b) {
                                 const cplx o = as_complex(observed);
                                 return o.imag() == 0.0 && o.real() <= b.value + tolerance;
                               }},
                    expected);
}

CheckReport CheckReport::make(std::string name, std::vector<std::pair<std::string, ParamValue>> params,
                              Observed observed, Expected expected, double tolerance, std::string resolution) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.observed = observed;
  r.expected = expected;
  r.tolerance = tolerance;
  r.resolution = std::move(resolution);
  r.pass = evaluate_pass(r.observed, r.expected, r.tolerance);
  return r;
}

double CheckReport::deviation() const {
  if (!finite(observed)) return std::numeric_limits<double>::max();
  const cplx o = as_complex(observed);
  return std::visit(overloaded{[](std::monostate) { return 0.0; },
                               [&](double e) { return std::abs(o - e); },
                               [&](cplx e) { return std::abs(o - e); },
                               [&](BoundValue b) { return o.real() - b.value; }},
                    expected);
}

}  // namespace bergman
