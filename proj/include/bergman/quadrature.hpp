#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bergman/disc.hpp"

namespace bergman {

enum class Smoothness { Smooth, Bounded, BoundarySingular };

/// Pointwise-evaluable complex function on the open disc. Evaluation must be
/// deterministic and side-effect free.
struct Samplable {
  std::function<cplx(cplx)> fn;
  Smoothness hint = Smoothness::Smooth;

  cplx operator()(cplx z) const { return fn(z); }

  static Samplable from_poly(TaylorPoly f);
  static Samplable constant(cplx c);
};

struct RadialNode {
  double r;
  double weight;  // already includes the 1/M angular factor
};

/// Tensor rule for integrals against dm_alpha over the disc.
///
/// With u = r^2 the measure becomes (alpha+1)(1-u)^alpha du dtheta/(2 pi), so
/// the radial part is an N-point Gauss-Jacobi rule for the weight (1-u)^alpha
/// on (0,1) and the angular part is the M-point trapezoid rule. The rule is
/// exact for z^n conj(z)^m whenever n = m <= 2N-1 or 0 < |n-m| < M, and the
/// weights sum to one. The origin is never a node.
class QuadRule {
 public:
  static QuadRule build(int radial_count, int angular_count, Weight alpha);

  int radial_count() const noexcept { return static_cast<int>(radial_.size()); }
  int angular_count() const noexcept { return static_cast<int>(angles_.size()); }
  double alpha() const noexcept { return alpha_; }
  // Polynomial exactness degree in u = r^2.
  int exactness_degree() const noexcept { return 2 * radial_count() - 1; }
  std::size_t node_count() const noexcept { return radial_.size() * angles_.size(); }

  std::span<const RadialNode> radial_nodes() const noexcept { return radial_; }
  // Unit-modulus angular factors e^{i theta_j}, theta_j = 2 pi j / M.
  std::span<const cplx> angular_factors() const noexcept { return angles_; }

  // "64x256"; recorded in every report.
  std::string resolution() const;

  // Visits every node in a fixed order (radial-major) as f(zeta, weight).
  template <class F>
  void for_each_node(F&& f) const {
    for (const auto& rn : radial_)
      for (const auto& e : angles_) f(rn.r * e, rn.weight);
  }

 private:
  QuadRule() = default;

  std::vector<RadialNode> radial_;
  std::vector<cplx> angles_;
  double alpha_ = 0.0;
};

/// Gauss-Jacobi nodes and normalized weights on (0,1) for the weight
/// (1-u)^alpha. Exposed for testing.
std::vector<std::pair<double, double>> gauss_jacobi_unit(int n, double alpha);

/// Weighted sum of samples of f over the rule. Non-finite samples raise an
/// Integration error naming the node.
cplx integrate(const Samplable& f, const QuadRule& rule);

// Same as integrate() for an arbitrary callable, without std::function.
template <class F>
cplx integrate_fn(F&& f, const QuadRule& rule);

[[noreturn]] void throw_nonfinite_sample(cplx zeta, cplx value);

template <class F>
cplx integrate_fn(F&& f, const QuadRule& rule) {
  cplx total{};
  for (const auto& rn : rule.radial_nodes()) {
    cplx ring{};
    for (const auto& e : rule.angular_factors()) {
      const cplx zeta = rn.r * e;
      const cplx v = f(zeta);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw_nonfinite_sample(zeta, v);
      ring += v;
    }
    total += rn.weight * ring;
  }
  return total;
}

}  // namespace bergman
