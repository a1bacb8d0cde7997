#include "bergman/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/error.hpp"
#include "bergman/kernel.hpp"

namespace bergman {

std::vector<DiscPoint> polar_grid_v1() {
  constexpr double radii[] = {0.25, 0.5, 0.75, 0.9, 0.95};
  constexpr int angles = 16;
  std::vector<DiscPoint> grid{DiscPoint(0.0)};
  for (const double r : radii)
    for (int j = 0; j < angles; ++j)
      grid.emplace_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / angles));
  return grid;
}

double lp_norm(const Samplable& f, Exponent p, const QuadRule& rule) {
  const double pp = p.p();
  const cplx s = integrate_fn([&](cplx z) { return cplx(std::pow(std::abs(f(z)), pp)); }, rule);
  return std::pow(s.real(), 1.0 / pp);
}

CheckReport growth_check(const TaylorPoly& f, Exponent p, std::size_t n, std::span<const DiscPoint> grid,
                         const QuadRule& rule) {
  if (std::abs(rule.alpha()) > 0.0) throw Error(ErrorCode::InvalidArgument, "growth_check needs a weight-0 rule");
  const double pp = p.p();
  const double nd = static_cast<double>(n);
  double constant = 1.0;
  double exponent = 2.0 / pp;
  if (n >= 1) {
    double factorial = 1.0;
    for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
    constant = factorial * std::pow(2.0, nd) * std::pow(2.0, 2.0 / pp);
    exponent = nd + 1.0 + 2.0 / pp;
  }
  const TaylorPoly fn = differentiate(f, n);
  double worst = 0.0;
  for (const auto& z : grid)
    worst = std::max(worst, std::abs(fn(z.value())) * std::pow(1.0 - z.abs(), exponent) / constant);
  const double norm = lp_norm(Samplable::from_poly(f), p, rule);
  return CheckReport::make("growth",
                           {{"p", pp},
                            {"n", static_cast<std::int64_t>(n)},
                            {"degree", static_cast<std::int64_t>(f.degree())},
                            {"norm", norm},
                            {"grid_points", static_cast<std::int64_t>(grid.size())}},
                           worst - norm, BoundValue{0.0}, 1e-9, rule.resolution());
}

ForelliRudin forelli_rudin(DiscPoint z, double s, double t, const QuadRule& rule) {
  if (!(1.0 < t && t < s)) {
    std::ostringstream os;
    os << "Forelli-Rudin estimate needs 1 < t < s, got s=" << s << ", t=" << t;
    throw Error(ErrorCode::Domain, os.str());
  }
  if (std::abs(rule.alpha() - (t - 2.0)) > 1e-14)
    throw Error(ErrorCode::InvalidArgument, "forelli_rudin needs a rule built with weight t-2");
  require_resolved(rule, z);
  const cplx zv = z.value();
  const cplx raw = integrate_fn(
      [&](cplx zeta) { return cplx(std::pow(std::abs(1.0 - std::conj(zv) * zeta), -s)); }, rule);
  // The rule integrates against (t-1)(1-|zeta|^2)^(t-2) dm.
  const double integral = raw.real() / (t - 1.0);
  return {integral, integral / std::pow(1.0 - std::norm(zv), t - s)};
}

double integral_mean(const Samplable& f, double r, Exponent p, int angular_count) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::Domain, "integral mean radius must lie in [0,1)");
  if (angular_count < 1) throw Error(ErrorCode::InvalidArgument, "angular_count must be positive");
  double sum = 0.0;
  for (int j = 0; j < angular_count; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / angular_count;
    sum += std::pow(std::abs(f(std::polar(r, theta))), p.p());
  }
  // (1/pi) * (2 pi / M) * sum
  return 2.0 * sum / static_cast<double>(angular_count);
}

double tail_error(const TaylorPoly& f, std::size_t N) {
  const double direct = a2_norm_sq(f - partial_sum(f, N));
  double series = 0.0;
  const auto a = f.coeffs();
  for (std::size_t n = N + 1; n < a.size(); ++n) series += std::norm(a[n]) / static_cast<double>(n + 1);
  if (std::abs(direct - series) > 1e-12 * std::max(1.0, series))
    throw Error(ErrorCode::Internal, "tail norm disagrees with the coefficient tail sum");
  return direct;
}

double dilation_error(const TaylorPoly& f, double rho, Exponent p, const QuadRule& rule) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::Domain, "dilation radius must lie in (0,1)");
  p.require_at_least(1.0);
  if (std::abs(rule.alpha()) > 0.0) throw Error(ErrorCode::InvalidArgument, "dilation_error needs a weight-0 rule");
  const TaylorPoly diff = f - dilate(f, rho);
  const double pp = p.p();
  return integrate_fn([&](cplx z) { return cplx(std::pow(std::abs(diff(z)), pp)); }, rule).real();
}

double deriv_seminorm(const TaylorPoly& f, std::size_t n, Exponent p, const QuadRule& rule) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "derivative order n must be positive");
  p.require_at_least(1.0);
  if (std::abs(rule.alpha()) > 0.0) throw Error(ErrorCode::InvalidArgument, "deriv_seminorm needs a weight-0 rule");
  const TaylorPoly fn = differentiate(f, n);
  const double pp = p.p();
  const double damp_power = static_cast<double>(n) * pp;
  return integrate_fn(
             [&](cplx z) {
               return cplx(std::pow(1.0 - std::norm(z), damp_power) * std::pow(std::abs(fn(z)), pp));
             },
             rule)
      .real();
}

NonnegKernel projection_majorant(Weight alpha) {
  const double power = -(2.0 + alpha.alpha());
  return [power](cplx x, cplx y) { return std::pow(std::abs(1.0 - std::conj(y) * x), power); };
}

SchurParams projection_schur_params(Weight alpha, Exponent p) {
  const double q = p.conjugate();
  return SchurParams{p, PowerTestFunction{-1.0 / (p.p() * q)}, alpha};
}

namespace {

double checked_kernel(const NonnegKernel& k, cplx x, cplx y) {
  const double v = k(x, y);
  if (!(v >= 0.0)) {
    std::ostringstream os;
    os << "Schur test kernel is negative (" << v << ") at x=" << x << ", y=" << y;
    throw Error(ErrorCode::Domain, os.str());
  }
  return v;
}

double checked_h(const Samplable& h, cplx z) {
  const cplx v = h(z);
  if (!(v.real() > 0.0) || v.imag() != 0.0) {
    std::ostringstream os;
    os << "Schur test function must be positive, got " << v << " at " << z;
    throw Error(ErrorCode::Domain, os.str());
  }
  return v.real();
}

// sup over grid of int K(grid, y) h(y)^e d mu(y) / h(grid)^e, or nullopt when
// the integral diverges. `transpose` swaps the kernel arguments.
std::optional<double> schur_sup(const NonnegKernel& kernel, const SchurParams& params, double e, bool transpose,
                                int radial, int angular, std::span<const DiscPoint> grid) {
  const double alpha = params.mu_weight.alpha();
  auto k = [&](cplx g, cplx y) { return transpose ? checked_kernel(kernel, y, g) : checked_kernel(kernel, g, y); };
  double sup = 0.0;
  if (const auto* power = std::get_if<PowerTestFunction>(&params.h)) {
    const double beta = alpha + e * power->gamma;
    if (!(beta > -1.0)) return std::nullopt;
    const QuadRule rule = QuadRule::build(radial, angular, Weight(beta));
    for (const auto& g : grid) {
      const cplx gv = g.value();
      const double integral = integrate_fn([&](cplx y) { return cplx(k(gv, y)); }, rule).real() / (beta + 1.0);
      sup = std::max(sup, integral / std::pow(1.0 - std::norm(gv), e * power->gamma));
    }
    return sup;
  }
  const Samplable& h = std::get<Samplable>(params.h);
  const QuadRule rule = QuadRule::build(radial, angular, params.mu_weight);
  for (const auto& g : grid) {
    const cplx gv = g.value();
    const double integral =
        integrate_fn([&](cplx y) { return cplx(k(gv, y) * std::pow(checked_h(h, y), e)); }, rule).real() /
        (alpha + 1.0);
    sup = std::max(sup, integral / std::pow(checked_h(h, gv), e));
  }
  return sup;
}

}  // namespace

SchurCertificate schur_report(const NonnegKernel& kernel, const SchurParams& params, int radial_count,
                              int angular_count, std::span<const DiscPoint> grid) {
  const double p = params.p.p();
  const double q = params.p.conjugate();
  double max_abs = 0.0;
  for (const auto& g : grid) max_abs = std::max(max_abs, g.abs());
  const int angular = std::max(angular_count, required_angular_count(max_abs));

  SchurCertificate cert;
  cert.c_a = schur_sup(kernel, params, q, false, radial_count, angular, grid);
  cert.c_b = schur_sup(kernel, params, p, true, radial_count, angular, grid);
  if (cert.c_a && cert.c_b) cert.bound = std::pow(*cert.c_a, 1.0 / q) * std::pow(*cert.c_b, 1.0 / p);

  std::vector<std::pair<std::string, ParamValue>> params_out{{"alpha", params.mu_weight.alpha()},
                                                             {"p", p},
                                                             {"diverged", !cert.bound.has_value()}};
  if (cert.c_a) params_out.emplace_back("C_a", *cert.c_a);
  if (cert.c_b) params_out.emplace_back("C_b", *cert.c_b);
  const Observed observed = cert.bound ? Observed(*cert.bound) : Observed(Divergent{});
  cert.report = CheckReport::make("schur", std::move(params_out), observed, std::monostate{}, 0.0,
                                  std::to_string(radial_count) + "x" + std::to_string(angular));
  return cert;
}

double projection_norm_ratio(const MixedPoly& f, Weight alpha, Exponent p, const QuadRule& rule) {
  if (std::abs(rule.alpha() - alpha.alpha()) > 1e-14)
    throw Error(ErrorCode::InvalidArgument, "projection_norm_ratio needs a rule built for alpha");
  const TaylorPoly pf = project_closed_form(f, alpha);
  const double num = lp_norm(Samplable::from_poly(pf), p, rule);
  const double den = lp_norm(f.as_samplable(), p, rule);
  if (!(den > 0.0)) throw Error(ErrorCode::Domain, "norm ratio of the zero function is undefined");
  return num / den;
}

std::optional<double> adjoint_divergence_witness(Weight alpha, Exponent q) {
  const double qq = q.p();
  if (!(qq > 1.0)) throw Error(ErrorCode::Domain, "adjoint divergence witness needs q > 1");
  const double a = alpha.alpha();
  if (!(a * qq > -1.0)) return std::nullopt;
  return std::pow(a + 1.0, qq) / (a * qq + 1.0);
}

}  // namespace bergman
