#pragma once

// Weighted Bergman projections evaluated pointwise by quadrature:
//
//   P_alpha f(z)  = int f(zeta) (1 - conj(zeta) z)^-(alpha+2) dm_alpha(zeta)
//   P_alpha* g(z) = (alpha+1) (1-|z|^2)^alpha int g(zeta) (1 - conj(zeta) z)^-(alpha+2) dm(zeta)
//
// The kernel at z concentrates in an angular window of width ~(1-|z|), so
// every evaluation requires the rule to carry at least
// required_angular_count(|z|) = ceil(50 / (1-|z|)) angles.

#include <span>
#include <vector>

#include "bergman/disc.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

int required_angular_count(double abs_z);

/// Throws InvalidArgument unless rule.angular_count() >= required_angular_count(|z|).
void require_resolved(const QuadRule& rule, DiscPoint z);

/// P_alpha f(z); rule must be built for the same alpha.
cplx project(const Samplable& f, Weight alpha, DiscPoint z, const QuadRule& rule);

/// P_alpha of several functions at one point, sharing the kernel samples.
std::vector<cplx> project_batch(std::span<const Samplable> fs, Weight alpha, DiscPoint z, const QuadRule& rule);

/// P_alpha applied to a function known only by its samples at the nodes of
/// `rule` (in QuadRule::for_each_node order).
cplx project_sampled(std::span<const cplx> node_values, Weight alpha, DiscPoint z, const QuadRule& rule);

/// P_alpha* g(z); rule must carry weight 0.
cplx adjoint(const Samplable& g, Weight alpha, DiscPoint z, const QuadRule& rule);

/// Samples of P_alpha f (resp. P_alpha* g) at every node of `outer`. Each node
/// gets its own inner rule with inner_radial radial nodes and
/// max(inner_angular, required_angular_count(|node|)) angles.
std::vector<cplx> sample_projection(const Samplable& f, Weight alpha, const QuadRule& outer, int inner_radial,
                                    int inner_angular);
std::vector<cplx> sample_adjoint(const Samplable& g, Weight alpha, const QuadRule& outer, int inner_radial,
                                 int inner_angular);

/// Unimodular witness g_a(zeta) = (1 - a conj(zeta))^2 / |1 - a conj(zeta)|^2, 0 < a < 1.
class WitnessGa {
 public:
  explicit WitnessGa(double a);

  double a() const noexcept { return a_; }
  cplx operator()(cplx zeta) const noexcept;
  Samplable as_samplable() const;

 private:
  double a_;
};

struct BlowupPair {
  double observed;  // Re P(g_a)(a) by quadrature
  double expected;  // int |1 - a zeta|^-2 dm = log(1 / (1 - a^2)) / a^2
};

/// Evaluates P(g_a) at a. The pair is returned for reporting; nothing is asserted.
BlowupPair blowup_witness(double a, const QuadRule& rule);

/// (1/n!) int (1-|zeta|^2)^n f^(n)(zeta) / (conj(zeta)^n (1 - conj(zeta) z)^2) dm(zeta).
/// Requires a_0 = ... = a_{2n-1} = 0 and a weight-0 rule; the result
/// reproduces f(z).
cplx derivative_reproduce(const TaylorPoly& f, std::size_t n, DiscPoint z, const QuadRule& rule);

/// |<f - P f, g>| with P f sampled by sample_projection() at the nodes of the
/// weight-0 rule.
double orthogonality_residual(const Samplable& f, const TaylorPoly& g, const QuadRule& rule);

/// Polynomial in zeta and conj(zeta): sum c_{jk} zeta^j conj(zeta)^k.
class MixedPoly {
 public:
  struct Term {
    std::size_t j;
    std::size_t k;
    cplx c;
  };

  MixedPoly() = default;
  explicit MixedPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static MixedPoly from_poly(const TaylorPoly& f);

  std::span<const Term> terms() const noexcept { return terms_; }
  cplx operator()(cplx zeta) const noexcept;
  Samplable as_samplable() const;

 private:
  std::vector<Term> terms_;
};

/// Exact P_alpha of a mixed polynomial: zeta^j conj(zeta)^k maps to
/// C_{j-k} w_j z^{j-k} for j >= k and to 0 otherwise, where C_n is the n-th
/// coefficient of (1-x)^-(alpha+2) and w_j = weighted_monomial_norm_sq(j, alpha).
TaylorPoly project_closed_form(const MixedPoly& f, Weight alpha);

/// n-th Taylor coefficient of (1 - x)^-(alpha+2), Gamma(n+alpha+2) / (n! Gamma(alpha+2)).
double kernel_series_coeff(std::size_t n, Weight alpha);

}  // namespace bergman
