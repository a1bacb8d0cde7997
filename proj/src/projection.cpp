#include "bergman/projection.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "bergman/error.hpp"
#include "bergman/kernel.hpp"

namespace bergman {

namespace {

void require_rule_weight(const QuadRule& rule, double alpha, const char* what) {
  if (std::abs(rule.alpha() - alpha) > 1e-14) {
    std::ostringstream os;
    os << what << " needs a rule built for alpha=" << alpha << ", got alpha=" << rule.alpha();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

// Inner rules keyed by angular count; a few distinct sizes cover all nodes.
class InnerRules {
 public:
  InnerRules(int radial, int angular_min, Weight weight)
      : radial_(radial), angular_min_(angular_min), weight_(weight) {}

  const QuadRule& for_point(double abs_z) {
    const int m = std::max(angular_min_, required_angular_count(abs_z));
    auto it = cache_.find(m);
    if (it == cache_.end()) it = cache_.emplace(m, QuadRule::build(radial_, m, weight_)).first;
    return it->second;
  }

 private:
  int radial_;
  int angular_min_;
  Weight weight_;
  std::map<int, QuadRule> cache_;
};

}  // namespace

int required_angular_count(double abs_z) {
  // slack keeps 1 - 0.9 rounding from pushing 500 to 501
  return static_cast<int>(std::ceil(50.0 / (1.0 - abs_z) * (1.0 - 1e-12)));
}

void require_resolved(const QuadRule& rule, DiscPoint z) {
  const int need = required_angular_count(z.abs());
  if (rule.angular_count() < need) {
    std::ostringstream os;
    os << "rule " << rule.resolution() << " under-resolves the kernel at |z|=" << z.abs() << ": need at least "
       << need << " angles";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

cplx project(const Samplable& f, Weight alpha, DiscPoint z, const QuadRule& rule) {
  require_rule_weight(rule, alpha.alpha(), "project");
  require_resolved(rule, z);
  const cplx zv = z.value();
  const double a = alpha.alpha();
  return integrate_fn([&](cplx zeta) { return f(zeta) * k_disc_unchecked(zv, zeta, a); }, rule);
}

std::vector<cplx> project_batch(std::span<const Samplable> fs, Weight alpha, DiscPoint z, const QuadRule& rule) {
  require_rule_weight(rule, alpha.alpha(), "project");
  require_resolved(rule, z);
  const cplx zv = z.value();
  const double a = alpha.alpha();
  std::vector<cplx> out(fs.size());
  for (const auto& rn : rule.radial_nodes()) {
    std::vector<cplx> ring(fs.size());
    for (const auto& e : rule.angular_factors()) {
      const cplx zeta = rn.r * e;
      const cplx k = k_disc_unchecked(zv, zeta, a);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const cplx v = fs[i](zeta) * k;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw_nonfinite_sample(zeta, v);
        ring[i] += v;
      }
    }
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] += rn.weight * ring[i];
  }
  return out;
}

cplx project_sampled(std::span<const cplx> node_values, Weight alpha, DiscPoint z, const QuadRule& rule) {
  require_rule_weight(rule, alpha.alpha(), "project");
  require_resolved(rule, z);
  if (node_values.size() != rule.node_count())
    throw Error(ErrorCode::InvalidArgument, "sample count does not match the rule's node count");
  const cplx zv = z.value();
  const double a = alpha.alpha();
  std::size_t idx = 0;
  return integrate_fn([&](cplx zeta) { return node_values[idx++] * k_disc_unchecked(zv, zeta, a); }, rule);
}

cplx adjoint(const Samplable& g, Weight alpha, DiscPoint z, const QuadRule& rule) {
  require_rule_weight(rule, 0.0, "adjoint");
  require_resolved(rule, z);
  const cplx zv = z.value();
  const double a = alpha.alpha();
  const cplx integral = integrate_fn([&](cplx zeta) { return g(zeta) * k_disc_unchecked(zv, zeta, a); }, rule);
  return (a + 1.0) * std::pow(1.0 - std::norm(zv), a) * integral;
}

std::vector<cplx> sample_projection(const Samplable& f, Weight alpha, const QuadRule& outer, int inner_radial,
                                    int inner_angular) {
  InnerRules inner(inner_radial, inner_angular, alpha);
  std::vector<cplx> out;
  out.reserve(outer.node_count());
  outer.for_each_node([&](cplx zeta, double) {
    const DiscPoint p(zeta);
    out.push_back(project(f, alpha, p, inner.for_point(p.abs())));
  });
  return out;
}

std::vector<cplx> sample_adjoint(const Samplable& g, Weight alpha, const QuadRule& outer, int inner_radial,
                                 int inner_angular) {
  InnerRules inner(inner_radial, inner_angular, Weight(0.0));
  std::vector<cplx> out;
  out.reserve(outer.node_count());
  outer.for_each_node([&](cplx zeta, double) {
    const DiscPoint p(zeta);
    out.push_back(adjoint(g, alpha, p, inner.for_point(p.abs())));
  });
  return out;
}

WitnessGa::WitnessGa(double a) : a_(a) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::Domain, "parameter a out of (0,1)");
}

cplx WitnessGa::operator()(cplx zeta) const noexcept {
  // (1 - a conj(zeta))^2 / |1 - a conj(zeta)|^2 = (1 - a conj(zeta)) / (1 - a zeta).
  return (1.0 - a_ * std::conj(zeta)) / (1.0 - a_ * zeta);
}

Samplable WitnessGa::as_samplable() const {
  return Samplable{[w = *this](cplx zeta) { return w(zeta); }, Smoothness::Bounded};
}

BlowupPair blowup_witness(double a, const QuadRule& rule) {
  const WitnessGa g(a);
  const cplx p = project(g.as_samplable(), Weight(0.0), DiscPoint(a), rule);
  // sum a^(2n)/(n+1) = log(1/(1-a^2)) / a^2
  return {p.real(), -std::log1p(-a * a) / (a * a)};
}

cplx derivative_reproduce(const TaylorPoly& f, std::size_t n, DiscPoint z, const QuadRule& rule) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "derivative order n must be positive");
  for (std::size_t m = 0; m < 2 * n; ++m) {
    if (f.coeff(m) != cplx{}) {
      std::ostringstream os;
      os << "reproducing formula of order " << n << " needs f^(k)(0) = 0 for k < " << 2 * n
         << "; coefficient a_" << m << " = " << f.coeff(m);
      throw Error(ErrorCode::Domain, os.str());
    }
  }
  require_rule_weight(rule, 0.0, "derivative_reproduce");
  require_resolved(rule, z);
  const TaylorPoly fn = differentiate(f, n);
  const cplx zv = z.value();
  const int order = static_cast<int>(n);
  const cplx integral = integrate_fn(
      [&](cplx zeta) {
        const cplx cz = std::conj(zeta);
        const double damp = std::pow(1.0 - std::norm(zeta), order);
        return damp * fn(zeta) / std::pow(cz, order) * k_disc_unchecked(zv, zeta, 0.0);
      },
      rule);
  double factorial = 1.0;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  return integral / factorial;
}

double orthogonality_residual(const Samplable& f, const TaylorPoly& g, const QuadRule& rule) {
  require_rule_weight(rule, 0.0, "orthogonality_residual");
  const std::vector<cplx> pf = sample_projection(f, Weight(0.0), rule, rule.radial_count(), rule.angular_count());
  std::size_t idx = 0;
  const cplx pairing = integrate_fn(
      [&](cplx zeta) {
        const cplx d = f(zeta) - pf[idx++];
        return d * std::conj(g(zeta));
      },
      rule);
  return std::abs(pairing);
}

MixedPoly MixedPoly::from_poly(const TaylorPoly& f) {
  std::vector<Term> terms;
  const auto c = f.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != cplx{}) terms.push_back({j, 0, c[j]});
  return MixedPoly(std::move(terms));
}

cplx MixedPoly::operator()(cplx zeta) const noexcept {
  const cplx cz = std::conj(zeta);
  cplx sum{};
  for (const auto& t : terms_) {
    cplx v = t.c;
    for (std::size_t i = 0; i < t.j; ++i) v *= zeta;
    for (std::size_t i = 0; i < t.k; ++i) v *= cz;
    sum += v;
  }
  return sum;
}

Samplable MixedPoly::as_samplable() const {
  return Samplable{[p = *this](cplx zeta) { return p(zeta); }, Smoothness::Smooth};
}

double kernel_series_coeff(std::size_t n, Weight alpha) {
  double c = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double id = static_cast<double>(i);
    c *= (id + alpha.alpha() + 1.0) / id;
  }
  return c;
}

TaylorPoly project_closed_form(const MixedPoly& f, Weight alpha) {
  std::vector<cplx> out;
  for (const auto& t : f.terms()) {
    if (t.j < t.k) continue;
    const std::size_t d = t.j - t.k;
    if (out.size() <= d) out.resize(d + 1);
    out[d] += kernel_series_coeff(d, alpha) * weighted_monomial_norm_sq(t.j, alpha) * t.c;
  }
  return TaylorPoly(std::move(out));
}

}  // namespace bergman
