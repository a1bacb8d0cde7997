#include "bergman/suite.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <map>
#include <mutex>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <thread>

#include "bergman/bounds.hpp"
#include "bergman/error.hpp"
#include "bergman/function_spec.hpp"
#include "bergman/kernel.hpp"
#include "bergman/projection.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/random.hpp"

namespace bergman {

namespace {

using Params = std::vector<std::pair<std::string, ParamValue>>;
using Reports = std::vector<CheckReport>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Radii times equispaced angles; radius 0 contributes the origin once.
std::vector<DiscPoint> polar_points(std::initializer_list<double> radii, int angles) {
  std::vector<DiscPoint> out;
  for (const double r : radii) {
    if (r == 0.0) {
      out.emplace_back(0.0);
      continue;
    }
    for (int j = 0; j < angles; ++j)
      out.emplace_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / angles));
  }
  return out;
}

std::string poly_text(const TaylorPoly& f) {
  std::string s = "poly:";
  const auto c = f.coeffs();
  if (c.empty()) return s + "0";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + format_complex(c[i]);
  return s;
}

Reports check_orthonormality(const SuiteConfig& cfg) {
  constexpr int kMax = 20;
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  std::vector<cplx> gram((kMax + 1) * (kMax + 1));
  std::vector<cplx> phi(kMax + 1);
  rule.for_each_node([&](cplx z, double w) {
    cplx power = 1.0;
    for (int n = 0; n <= kMax; ++n) {
      phi[n] = std::sqrt(static_cast<double>(n + 1)) * power;
      power *= z;
    }
    for (int n = 0; n <= kMax; ++n)
      for (int m = 0; m <= kMax; ++m) gram[n * (kMax + 1) + m] += w * phi[n] * std::conj(phi[m]);
  });
  double worst = 0.0;
  for (int n = 0; n <= kMax; ++n)
    for (int m = 0; m <= kMax; ++m)
      worst = std::max(worst, std::abs(gram[n * (kMax + 1) + m] - (n == m ? 1.0 : 0.0)));
  return {CheckReport::make("orthonormality", {{"max_index", std::int64_t{kMax}}}, worst, 0.0, 1e-10,
                            rule.resolution())};
}

Reports check_kernel_series(const SuiteConfig&) {
  const auto pts = polar_points({0.0, 0.35, 0.7}, 8);
  double worst = 0.0;
  for (const auto& z : pts)
    for (const auto& w : pts) worst = std::max(worst, std::abs(k_series(z, w, 100) - k_disc(z, w, Weight(0.0))));
  return {CheckReport::make("kernel-series", {{"terms", std::int64_t{100}}, {"max_abs", 0.7}}, worst, 0.0, 1e-8,
                            "exact")};
}

Reports check_reproducing(const SuiteConfig& cfg) {
  SeededRng rng(cfg.seed, "reproducing");
  std::vector<TaylorPoly> polys;
  std::vector<Samplable> fs;
  for (int i = 0; i < 50; ++i) {
    polys.push_back(random_poly(rng, 10));
    fs.push_back(Samplable::from_poly(polys.back()));
  }
  const auto pts = polar_points({0.16, 0.32, 0.48, 0.64, 0.8}, 8);
  Reports out;
  for (const double alpha : {0.0, 0.5, 1.0, 2.0}) {
    const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(alpha));
    double worst = 0.0;
    for (const auto& z : pts) {
      const auto values = project_batch(fs, Weight(alpha), z, rule);
      for (std::size_t i = 0; i < polys.size(); ++i) worst = std::max(worst, std::abs(values[i] - polys[i](z.value())));
    }
    out.push_back(CheckReport::make("reproducing",
                                    {{"alpha", alpha}, {"polynomials", std::int64_t{50}}, {"max_abs_z", 0.8}}, worst,
                                    0.0, 1e-8, rule.resolution()));
  }
  return out;
}

Reports check_kernel_norm(const SuiteConfig& cfg) {
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  double worst = 0.0;
  for (const auto& z : polar_points({0.0, 0.2, 0.4, 0.6, 0.8}, 8)) {
    const cplx zv = z.value();
    const cplx integral = integrate_fn([&](cplx w) { return cplx(std::norm(k_disc_unchecked(zv, w, 0.0))); }, rule);
    const double diag = 1.0 / std::pow(1.0 - std::norm(zv), 2);
    worst = std::max(worst, std::abs(integral - diag));
  }
  return {CheckReport::make("kernel-norm", {{"max_abs_z", 0.8}}, worst, 0.0, 1e-8, rule.resolution())};
}

Reports check_extremal(const SuiteConfig& cfg) {
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  double worst = 0.0;
  for (const auto& z : polar_points({0.0, 0.3, 0.6, 0.8}, 4)) {
    const cplx zv = z.value();
    const double diag = k_disc(z, z, Weight(0.0)).real();
    const Samplable f{[zv, diag](cplx w) { return k_disc_unchecked(w, zv, 0.0) / diag; }, Smoothness::Smooth};
    worst = std::max(worst, std::abs(lp_norm(f, Exponent(2.0), rule) - 1.0 / std::sqrt(diag)));
  }
  return {CheckReport::make("extremal", {{"max_abs_z", 0.8}}, worst, 0.0, 1e-8, rule.resolution())};
}

constexpr double kBlowupA[] = {0.5, 0.9, 0.99};

QuadRule blowup_rule(const SuiteConfig& cfg, double a) {
  return QuadRule::build(cfg.resolution.radial, std::max(cfg.resolution.angular, required_angular_count(a)),
                         Weight(0.0));
}

Reports check_blowup(const SuiteConfig& cfg) {
  Reports out;
  for (const double a : kBlowupA) {
    const QuadRule rule = blowup_rule(cfg, a);
    const BlowupPair bp = blowup_witness(a, rule);
    out.push_back(CheckReport::make("blowup", {{"a", a}}, bp.observed, bp.expected, a < 0.99 ? 1e-4 : 1e-3,
                                    rule.resolution()));
  }
  return out;
}

Reports check_blowup_monotone(const SuiteConfig& cfg) {
  std::vector<double> observed;
  std::string resolution;
  for (const double a : {0.5, 0.7, 0.9, 0.99}) {
    const QuadRule rule = blowup_rule(cfg, a);
    observed.push_back(blowup_witness(a, rule).observed);
    resolution = rule.resolution();
  }
  std::int64_t violations = 0;
  for (std::size_t i = 1; i < observed.size(); ++i)
    if (!(observed[i] > observed[i - 1])) ++violations;
  return {CheckReport::make("blowup-monotone", {{"a_values", std::string("0.5,0.7,0.9,0.99")}},
                            static_cast<double>(violations), 0.0, 0.0, resolution)};
}

Reports check_adjoint_identity(const SuiteConfig& cfg) {
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  const Samplable one = Samplable::constant(1.0);
  Reports out;
  for (const double alpha : {0.0, 1.0, 2.0}) {
    double worst = 0.0;
    for (const auto& z : polar_points({0.0, 0.2, 0.4, 0.6, 0.8}, 8)) {
      const cplx v = adjoint(one, Weight(alpha), z, rule);
      worst = std::max(worst, std::abs(v - (alpha + 1.0) * std::pow(1.0 - z.abs() * z.abs(), alpha)));
    }
    out.push_back(CheckReport::make("adjoint-identity", {{"alpha", alpha}, {"max_abs_z", 0.8}}, worst, 0.0, 1e-8,
                                    rule.resolution()));
  }
  return out;
}

Reports check_threshold(const SuiteConfig&) {
  std::int64_t mismatches = 0;
  std::int64_t cases = 0;
  for (const double alpha : {-0.5, -0.25, 0.0, 0.5, 1.0}) {
    for (const double p : {1.2, 2.0, 4.0}) {
      const Exponent pe(p);
      const bool finite = adjoint_divergence_witness(Weight(alpha), Exponent(pe.conjugate())).has_value();
      const bool bounded = p * (alpha + 1.0) > 1.0;
      if (finite != bounded) ++mismatches;
      ++cases;
    }
  }
  return {CheckReport::make("threshold", {{"cases", cases}}, static_cast<double>(mismatches), 0.0, 0.0, "exact")};
}

Reports check_schur(const SuiteConfig& cfg) {
  const auto grid = polar_grid_v1();
  Reports out;
  const std::pair<double, double> cases[] = {{0.0, 2.0}, {1.0, 2.0}, {1.0, 1.5}};
  for (const auto& [alpha, p] : cases) {
    const Weight w(alpha);
    const Exponent pe(p);
    SchurCertificate cert = schur_report(projection_majorant(w), projection_schur_params(w, pe),
                                         cfg.resolution.radial, cfg.resolution.angular, grid);
    out.push_back(cert.report);

    SeededRng rng(cfg.seed, "schur-" + format_double(alpha) + "-" + format_double(p));
    const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, w);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const MixedPoly f = random_mixed_poly(rng, 4, 6);
      if (f.terms().empty()) continue;
      worst = std::max(worst, projection_norm_ratio(f, w, pe, rule));
    }
    Params params{{"alpha", alpha}, {"p", p}, {"polynomials", std::int64_t{20}}};
    if (cert.bound) {
      const double projection_bound = (alpha + 1.0) * *cert.bound;
      params.emplace_back("projection_bound", projection_bound);
      out.push_back(CheckReport::make("schur-dominance", std::move(params), worst, BoundValue{projection_bound}, 0.0,
                                      rule.resolution()));
    } else {
      out.push_back(CheckReport::make("schur-dominance", std::move(params), Divergent{}, BoundValue{0.0}, 0.0,
                                      rule.resolution()));
    }
  }
  return out;
}

Reports check_forelli_rudin(const SuiteConfig& cfg) {
  const double radii[] = {0.0, 0.5, 0.9, 0.95};
  const int angular = std::max(cfg.resolution.angular, required_angular_count(0.95));
  Reports out;
  const std::pair<double, double> cases[] = {{2.0, 1.5}, {3.0, 2.0}, {4.0, 2.5}};
  for (const auto& [s, t] : cases) {
    const QuadRule rule = QuadRule::build(cfg.resolution.radial, angular, Weight(t - 2.0));
    double lo = std::numeric_limits<double>::max();
    double hi = 0.0;
    Params params{{"s", s}, {"t", t}};
    for (const double r : radii) {
      const ForelliRudin fr = forelli_rudin(DiscPoint(r), s, t, rule);
      lo = std::min(lo, fr.ratio);
      hi = std::max(hi, fr.ratio);
      params.emplace_back("ratio@" + format_double(r), fr.ratio);
    }
    out.push_back(CheckReport::make("forelli-rudin", std::move(params), hi / lo, BoundValue{50.0}, 0.0,
                                    rule.resolution()));
  }
  return out;
}

Reports check_taylor_tail(const SuiteConfig& cfg) {
  SeededRng rng(cfg.seed, "taylor-tail");
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TaylorPoly f = random_poly(rng, 20);
    for (std::size_t N = 0; N <= 25; ++N) {
      double tail = 0.0;
      for (std::size_t n = N + 1; n <= f.degree(); ++n) tail += std::norm(fourier_coeff(f, n));
      worst = std::max(worst, std::abs(tail_error(f, N) - tail));
    }
  }
  return {CheckReport::make("taylor-tail", {{"polynomials", std::int64_t{20}}}, worst, 0.0, 1e-12, "exact")};
}

Reports check_dilation(const SuiteConfig& cfg) {
  SeededRng rng(cfg.seed, "dilation");
  TaylorPoly random = random_poly(rng, 6);
  if (random.degree() == 0) random = random + TaylorPoly{0.0, 1.0};
  const std::vector<TaylorPoly> fs{TaylorPoly{0.0, 1.0}, TaylorPoly{0.0, 0.0, 1.0}, TaylorPoly{1.0, 1.0, 0.0, 1.0},
                                   random};
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  const double rhos[] = {0.5, 0.9, 0.99, 0.999};
  Reports out;
  for (const auto& f : fs) {
    for (const double p : {1.0, 2.0}) {
      std::vector<double> errs;
      for (const double rho : rhos) errs.push_back(dilation_error(f, rho, Exponent(p), rule));
      std::int64_t violations = 0;
      for (std::size_t i = 1; i < errs.size(); ++i)
        if (!(errs[i] < errs[i - 1])) ++violations;
      // "to zero": the last error must be below 1% of the first.
      if (!(errs.back() < 0.01 * errs.front())) ++violations;
      Params params{{"f", poly_text(f)}, {"p", p}};
      for (std::size_t i = 0; i < errs.size(); ++i) params.emplace_back("err@" + format_double(rhos[i]), errs[i]);
      out.push_back(CheckReport::make("dilation", std::move(params), static_cast<double>(violations), 0.0, 0.0,
                                      rule.resolution()));
    }
  }
  return out;
}

Reports check_integral_means(const SuiteConfig& cfg) {
  const char* specs[] = {"poly:0,1", "poly:0,0,0,1", "poly:1,2,1", "normkernel:0.5"};
  constexpr int kRadii = 20;
  Reports out;
  for (const char* text : specs) {
    const Samplable f = FunctionSpec::parse(text).to_samplable();
    for (const double p : {1.0, 2.0}) {
      std::vector<double> means;
      for (int i = 0; i < kRadii; ++i)
        means.push_back(integral_mean(f, 0.95 * i / (kRadii - 1), Exponent(p), cfg.resolution.angular));
      std::int64_t violations = 0;
      for (int i = 0; i < kRadii; ++i)
        for (int j = i + 1; j < kRadii; ++j)
          if (means[i] > means[j] + 1e-10) ++violations;
      out.push_back(CheckReport::make("integral-means",
                                      {{"f", std::string(text)}, {"p", p}, {"reading", std::string("nondecreasing")}},
                                      static_cast<double>(violations), 0.0, 0.0,
                                      "M=" + std::to_string(cfg.resolution.angular)));
    }
  }
  return out;
}

Reports check_conformal(const SuiteConfig&) {
  const cplx a(0.5, 0.0);
  const KernelFn k = disc_kernel();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const cplx z = std::polar(0.1 + 0.07 * i, 0.9 * i);
    const cplx d = 1.0 - std::conj(a) * z;
    const cplx oracle = (1.0 - std::norm(a)) / (d * d);
    worst = std::max(worst, std::abs(riemann_deriv(k, a, z) - oracle));
  }
  const cplx at_base = riemann_deriv(k, a, a);
  return {CheckReport::make("conformal", {{"base", a}, {"probes", std::int64_t{10}}}, worst, 0.0, 1e-10, "exact"),
          CheckReport::make("riemann-positivity", {{"base", a}, {"real_part", at_base.real()}},
                            at_base.real() > 0.0 ? std::abs(at_base.imag()) : 1.0, 0.0, 0.0, "exact")};
}

Reports check_pullback(const SuiteConfig&) {
  const auto pts = polar_points({0.0, 0.3, 0.6}, 4);
  const KernelFn j = disc_kernel();
  Reports out;
  for (const cplx a : {cplx(0.0), cplx(0.3), cplx(0.6, 0.2)}) {
    const DomainMap map = DomainMap::disc_automorphism(DiscPoint(a));
    double worst = 0.0;
    for (const auto& z : pts)
      for (const auto& w : pts)
        worst = std::max(worst, std::abs(pullback_kernel(map, j, z, w) - k_disc(z, w, Weight(0.0))));
    out.push_back(CheckReport::make("pullback", {{"a", a}}, worst, 0.0, 1e-12, "exact"));
  }
  return out;
}

Reports check_mobius_metric(const SuiteConfig& cfg) {
  SeededRng rng(cfg.seed, "mobius-metric");
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DiscPoint a(std::polar(0.95 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform()));
    const DiscPoint w(std::polar(0.95 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform()));
    const MobiusValue m = mobius(a, w);
    worst = std::max(worst, std::abs((1.0 - std::norm(m.value)) - std::abs(m.deriv) * (1.0 - std::norm(w.value()))));
  }
  return {CheckReport::make("mobius-metric", {{"pairs", std::int64_t{100}}}, worst, 0.0, 1e-12, "exact")};
}

Reports check_derivative_reproducing(const SuiteConfig& cfg) {
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  const auto pts = polar_points({0.0, 0.35, 0.7}, 8);
  Reports out;
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {3, 1}, {4, 2}};
  for (const auto& [m, n] : cases) {
    const TaylorPoly f = TaylorPoly::monomial(m);
    double worst = 0.0;
    for (const auto& z : pts) worst = std::max(worst, std::abs(derivative_reproduce(f, n, z, rule) - f(z.value())));
    out.push_back(CheckReport::make("derivative-reproducing",
                                    {{"f", poly_text(f)}, {"n", static_cast<std::int64_t>(n)}, {"max_abs_z", 0.7}},
                                    worst, 0.0, 1e-7, rule.resolution()));
  }
  return out;
}

Reports check_growth(const SuiteConfig& cfg) {
  SeededRng rng(cfg.seed, "growth");
  std::vector<TaylorPoly> polys;
  for (int i = 0; i < 50; ++i) polys.push_back(random_poly(rng, 10));
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  const auto grid = polar_grid_v1();
  Reports out;
  for (const double p : {1.0, 2.0, 4.0}) {
    for (const std::size_t n : {0u, 1u, 2u}) {
      double worst = -std::numeric_limits<double>::max();
      std::int64_t violations = 0;
      for (const auto& f : polys) {
        const CheckReport r = growth_check(f, Exponent(p), n, grid, rule);
        worst = std::max(worst, std::get<double>(r.observed));
        if (!r.pass) ++violations;
      }
      out.push_back(CheckReport::make("growth",
                                      {{"p", p},
                                       {"n", static_cast<std::int64_t>(n)},
                                       {"polynomials", std::int64_t{50}},
                                       {"violations", violations},
                                       {"grid", std::string("polar-v1")}},
                                      worst, BoundValue{0.0}, 1e-9, rule.resolution()));
    }
  }
  return out;
}

Reports check_orthogonality_residual(const SuiteConfig& cfg) {
  const QuadRule outer = QuadRule::build(10, 32, Weight(0.0));
  SeededRng rng(cfg.seed, "orthogonality-residual");
  const TaylorPoly f_poly = random_poly(rng, 6);
  const TaylorPoly g_poly = random_poly(rng, 6);
  struct Case {
    std::string f;
    Samplable fn;
    TaylorPoly g;
  };
  const std::vector<Case> cases{
      {"conj-monomial:1", FunctionSpec::parse("conj-monomial:1").to_samplable(), TaylorPoly{0.0, 1.0}},
      {"abs-squared", Samplable{[](cplx z) { return cplx(std::norm(z)); }, Smoothness::Smooth}, TaylorPoly{1.0}},
      {poly_text(f_poly), Samplable::from_poly(f_poly), g_poly},
  };
  Reports out;
  for (const auto& c : cases) {
    const double r = orthogonality_residual(c.fn, c.g, outer);
    out.push_back(
        CheckReport::make("orthogonality-residual", {{"f", c.f}, {"g", poly_text(c.g)}}, r, 0.0, 1e-9,
                          outer.resolution()));
  }
  return out;
}

Reports check_adjoint_duality(const SuiteConfig& cfg) {
  const QuadRule outer = QuadRule::build(10, 32, Weight(0.0));
  SeededRng rng(cfg.seed, "adjoint-duality");
  const TaylorPoly f = random_poly(rng, 5);
  const WitnessGa g(0.25);
  const Samplable fs = Samplable::from_poly(f);
  const Samplable gs = g.as_samplable();
  Reports out;
  for (const double alpha : {0.0, 1.0}) {
    const auto pf = sample_projection(fs, Weight(alpha), outer, 16, 32);
    const auto pg = sample_adjoint(gs, Weight(alpha), outer, 16, 32);
    std::size_t i = 0;
    const cplx lhs = integrate_fn([&](cplx z) { return pf[i++] * std::conj(gs(z)); }, outer);
    i = 0;
    const cplx rhs = integrate_fn([&](cplx z) { return fs(z) * std::conj(pg[i++]); }, outer);
    out.push_back(CheckReport::make("adjoint-duality", {{"alpha", alpha}, {"f", poly_text(f)}, {"g", std::string("ga:0.25")}},
                                    std::abs(lhs - rhs), 0.0, 1e-7, outer.resolution()));
  }
  return out;
}

Reports check_deriv_seminorm(const SuiteConfig& cfg) {
  SeededRng rng(cfg.seed, "deriv-seminorm");
  const QuadRule rule = QuadRule::build(cfg.resolution.radial, cfg.resolution.angular, Weight(0.0));
  double constant = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TaylorPoly f = random_poly(rng, 8);
    const double norm_sq = a2_norm_sq(f);
    if (norm_sq == 0.0) continue;
    constant = std::max(constant, deriv_seminorm(f, 1, Exponent(2.0), rule) / norm_sq);
  }
  return {CheckReport::make("deriv-seminorm", {{"n", std::int64_t{1}}, {"p", 2.0}, {"polynomials", std::int64_t{20}}},
                            constant, std::monostate{}, 0.0, rule.resolution())};
}

using CheckFn = Reports (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"orthonormality", check_orthonormality},
      {"kernel-series", check_kernel_series},
      {"reproducing", check_reproducing},
      {"kernel-norm", check_kernel_norm},
      {"extremal", check_extremal},
      {"blowup", check_blowup},
      {"blowup-monotone", check_blowup_monotone},
      {"adjoint-identity", check_adjoint_identity},
      {"threshold", check_threshold},
      {"schur", check_schur},
      {"forelli-rudin", check_forelli_rudin},
      {"taylor-tail", check_taylor_tail},
      {"dilation", check_dilation},
      {"integral-means", check_integral_means},
      {"conformal", check_conformal},
      {"pullback", check_pullback},
      {"mobius-metric", check_mobius_metric},
      {"derivative-reproducing", check_derivative_reproducing},
      {"growth", check_growth},
      {"orthogonality-residual", check_orthogonality_residual},
      {"adjoint-duality", check_adjoint_duality},
      {"deriv-seminorm", check_deriv_seminorm},
  };
  return checks;
}

CheckFn find_check(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn;
  throw Error(ErrorCode::UnknownCheck, "unknown check '" + name + "'");
}

nlohmann::ordered_json param_json(const ParamValue& v) {
  return std::visit(overloaded{[](bool b) { return nlohmann::ordered_json(b); },
                               [](std::int64_t i) { return nlohmann::ordered_json(i); },
                               [](double d) { return nlohmann::ordered_json(d); },
                               [](cplx c) { return nlohmann::ordered_json::array({c.real(), c.imag()}); },
                               [](const std::string& s) { return nlohmann::ordered_json(s); }},
                    v);
}

std::string param_text(const ParamValue& v) {
  return std::visit(overloaded{[](bool b) { return std::string(b ? "true" : "false"); },
                               [](std::int64_t i) { return std::to_string(i); },
                               [](double d) { return format_double(d); },
                               [](cplx c) { return format_complex(c); },
                               [](const std::string& s) { return s; }},
                    v);
}

}  // namespace

Resolution parse_resolution(std::string_view text) {
  const std::size_t x = text.find('x');
  Resolution r;
  auto parse_int = [&](std::string_view s, std::size_t at) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1)
      throw ParseError("malformed rule size '" + std::string(text) + "' (expected e.g. 64x256)", at);
    return v;
  };
  if (x == std::string_view::npos) throw ParseError("malformed rule size '" + std::string(text) + "'", 0);
  r.radial = parse_int(text.substr(0, x), 0);
  r.angular = parse_int(text.substr(x + 1), x + 1);
  return r;
}

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, fn] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_check(const std::string& name, const SuiteConfig& config) {
  return find_check(name)(config);
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BERGMAN_KIT_THREADS")) {
    unsigned cap = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && ptr == s.data() + s.size() && cap > 0) n = std::min(n, cap);
  }
  return n;
}

int run_suite(const SuiteConfig& config, const std::function<void(const CheckReport&)>& sink) {
  std::vector<CheckFn> fns;
  for (const auto& name : config.checks) fns.push_back(find_check(name));

  const std::size_t count = fns.size();
  std::vector<std::optional<Reports>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      Reports r;
      std::exception_ptr err;
      try {
        r = fns[i](config);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        errors[i] = err;
      }
      ready.notify_all();
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(config.threads ? config.threads : default_thread_count(), count));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  // Single ordered writer: report i is emitted only after reports 0..i-1.
  bool all_pass = true;
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    Reports reports = std::move(*results[i]);
    const std::exception_ptr err = errors[i];
    lock.unlock();
    if (err) {
      if (!first_error) first_error = err;
      all_pass = false;
      continue;
    }
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      sink(r);
    }
  }
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
  return all_pass ? 0 : 1;
}

std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  params["resolution"] = r.resolution;
  for (const auto& [k, v] : r.params) params[k] = param_json(v);
  j["params"] = params;
  j["observed"] = std::visit(overloaded{[](double d) { return nlohmann::ordered_json(d); },
                                        [](cplx c) { return nlohmann::ordered_json::array({c.real(), c.imag()}); },
                                        [](Divergent) { return nlohmann::ordered_json("divergent"); }},
                             r.observed);
  j["expected"] = std::visit(overloaded{[](std::monostate) { return nlohmann::ordered_json(nullptr); },
                                        [](double d) { return nlohmann::ordered_json(d); },
                                        [](cplx c) { return nlohmann::ordered_json::array({c.real(), c.imag()}); },
                                        [](BoundValue b) { return nlohmann::ordered_json{{"bound", b.value}}; }},
                             r.expected);
  j["tol"] = r.tolerance;
  j["pass"] = r.pass;
  return j.dump();
}

std::string csv_header() { return "check,params,observed,expected,tol,pass"; }

std::string to_csv_line(const CheckReport& r) {
  std::string params = "resolution=" + r.resolution;
  for (const auto& [k, v] : r.params) params += ";" + k + "=" + param_text(v);
  const std::string observed = std::visit(overloaded{[](double d) { return format_double(d); },
                                                     [](cplx c) { return format_complex(c); },
                                                     [](Divergent) { return std::string("divergent"); }},
                                          r.observed);
  const std::string expected = std::visit(overloaded{[](std::monostate) { return std::string(); },
                                                     [](double d) { return format_double(d); },
                                                     [](cplx c) { return format_complex(c); },
                                                     [](BoundValue b) { return "bound:" + format_double(b.value); }},
                                          r.expected);
  return r.name + "," + params + "," + observed + "," + expected + "," + format_double(r.tolerance) + "," +
         (r.pass ? "true" : "false");
}

std::string format_report(const CheckReport& report, OutputFormat format) {
  return format == OutputFormat::Json ? to_json_line(report) : to_csv_line(report);
}

}  // namespace bergman
