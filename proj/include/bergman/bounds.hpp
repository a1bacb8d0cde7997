#pragma once

// Numerical checks of growth bounds, integral estimates and Schur's test.
// Constants that are only known to exist (Forelli-Rudin C(s,t), Schur C,
// derivative-seminorm comparability) are reported as measured quantities and
// never compared against invented values.

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bergman/disc.hpp"
#include "bergman/projection.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/report.hpp"

namespace bergman {

/// Fixed sup-grid, version 1: radii {0, 0.25, 0.5, 0.75, 0.9, 0.95} times 16
/// equispaced angles, the origin listed once.
std::vector<DiscPoint> polar_grid_v1();

/// (int |f|^p dm_alpha)^(1/p) with alpha taken from the rule.
double lp_norm(const Samplable& f, Exponent p, const QuadRule& rule);

/// Growth of f^(n) against the A^p norm on the grid:
///   n = 0:  |f(z)| (1-|z|)^(2/p)                       <= ||f||_p
///   n >= 1: |f^(n)(z)| (1-|z|)^(n+1+2/p) / (n! 2^n 2^(2/p)) <= ||f||_p
/// observed = max over grid of the left side minus ||f||_p (quadrature,
/// weight-0 rule); passes when observed <= 1e-9.
CheckReport growth_check(const TaylorPoly& f, Exponent p, std::size_t n, std::span<const DiscPoint> grid,
                         const QuadRule& rule);

struct ForelliRudin {
  double integral;
  double ratio;  // integral / (1-|z|^2)^(t-s)
};

/// int (1-|zeta|^2)^(t-2) / |1 - conj(z) zeta|^s dm(zeta) for 1 < t < s. The
/// rule must be built with weight t-2 and resolve z.
ForelliRudin forelli_rudin(DiscPoint z, double s, double t, const QuadRule& rule);

/// F(r) = (1/pi) int_0^{2pi} |f(r e^{i theta})|^p d theta by the M-point trapezoid rule.
double integral_mean(const Samplable& f, double r, Exponent p, int angular_count);

/// ||f - S_N f||^2 in A^2, checked against sum_{n>N} |a_n|^2/(n+1).
double tail_error(const TaylorPoly& f, std::size_t N);

/// ||f - f_rho||_p^p by quadrature over a weight-0 rule; 0 < rho < 1, p >= 1.
double dilation_error(const TaylorPoly& f, double rho, Exponent p, const QuadRule& rule);

/// int (1-|z|^2)^(n p) |f^(n)(z)|^p dm over a weight-0 rule; n >= 1, p >= 1.
double deriv_seminorm(const TaylorPoly& f, std::size_t n, Exponent p, const QuadRule& rule);

/// Nonnegative kernel K(x, y).
using NonnegKernel = std::function<double(cplx x, cplx y)>;

/// |1 - conj(y) x|^-(2+alpha), the majorant of the P_alpha kernel.
NonnegKernel projection_majorant(Weight alpha);

/// h(z) = (1-|z|^2)^gamma. Powers of h are folded into the radial Jacobi
/// weight so boundary singularities are integrated exactly.
struct PowerTestFunction {
  double gamma;
};

struct SchurParams {
  Exponent p;                                           // p > 1
  std::variant<PowerTestFunction, Samplable> h;         // positive test function
  Weight mu_weight;                                     // d mu = (1-|z|^2)^alpha dm
};

/// Test function h = (1-|z|^2)^(-1/(pq)) and d mu = (1-|z|^2)^alpha dm.
SchurParams projection_schur_params(Weight alpha, Exponent p);

struct SchurCertificate {
  std::optional<double> c_a;    // sup_x int K(x,y) h(y)^q d mu(y) / h(x)^q; nullopt if divergent
  std::optional<double> c_b;    // sup_y int K(x,y) h(x)^p d mu(x) / h(y)^p
  std::optional<double> bound;  // c_a^(1/q) c_b^(1/p), bounds T f = int K f d mu on L^p(mu)
  CheckReport report;
};

/// Empirical Schur constants on the grid. Integrals use radial_count radial
/// nodes and max(angular_count, required_angular_count(max |grid|)) angles.
/// Negative kernel samples and nonpositive h samples raise Domain errors.
SchurCertificate schur_report(const NonnegKernel& kernel, const SchurParams& params, int radial_count,
                              int angular_count, std::span<const DiscPoint> grid);

/// ||P_alpha f||_p / ||f||_p in L^p(dm_alpha), P_alpha taken in closed form.
/// The rule must carry weight alpha.
double projection_norm_ratio(const MixedPoly& f, Weight alpha, Exponent p, const QuadRule& rule);

/// (alpha+1)^q int_0^1 (1-u)^(alpha q) du: (alpha+1)^q / (alpha q + 1) when
/// alpha q > -1, otherwise divergent (nullopt). Finite exactly when
/// p (alpha+1) > 1 with p the conjugate of q.
std::optional<double> adjoint_divergence_witness(Weight alpha, Exponent q);

}  // namespace bergman
