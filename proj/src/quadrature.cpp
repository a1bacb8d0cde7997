#include "bergman/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/error.hpp"

namespace bergman {

Samplable Samplable::from_poly(TaylorPoly f) {
  return Samplable{[f = std::move(f)](cplx z) { return f(z); }, Smoothness::Smooth};
}

Samplable Samplable::constant(cplx c) {
  return Samplable{[c](cplx) { return c; }, Smoothness::Smooth};
}

std::vector<std::pair<double, double>> gauss_jacobi_unit(int n, double alpha) {
  // Golub-Welsch on [-1,1] with weight (1-x)^a (1+x)^b, a = alpha, b = 0,
  // then u = (1+x)/2 so that 1-u = (1-x)/2.
  const double a = alpha;
  const double b = 0.0;
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    diag[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    double beta;
    if (k == 1)
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    else
      beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub[k - 1] = std::sqrt(beta);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::Internal, "Gauss-Jacobi eigenproblem did not converge");

  std::vector<std::pair<double, double>> out(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    out[static_cast<std::size_t>(k)] = {0.5 * (1.0 + solver.eigenvalues()[k]), v0 * v0};
    total += v0 * v0;
  }
  for (auto& [u, w] : out) w /= total;
  return out;
}

QuadRule QuadRule::build(int radial_count, int angular_count, Weight alpha) {
  if (radial_count < 1) throw Error(ErrorCode::InvalidArgument, "radial_count must be positive");
  if (angular_count < 1) throw Error(ErrorCode::InvalidArgument, "angular_count must be positive");

  QuadRule rule;
  rule.alpha_ = alpha.alpha();
  const double inv_m = 1.0 / static_cast<double>(angular_count);
  for (const auto& [u, w] : gauss_jacobi_unit(radial_count, alpha.alpha())) {
    if (!(u > 0.0 && u < 1.0))
      throw Error(ErrorCode::Internal, "radial node escaped (0,1); use fewer radial nodes");
    rule.radial_.push_back({std::sqrt(u), w * inv_m});
  }
  rule.angles_.reserve(static_cast<std::size_t>(angular_count));
  for (int j = 0; j < angular_count; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) * inv_m;
    rule.angles_.push_back(std::polar(1.0, theta));
  }
  return rule;
}

std::string QuadRule::resolution() const {
  return std::to_string(radial_count()) + "x" + std::to_string(angular_count());
}

void throw_nonfinite_sample(cplx zeta, cplx value) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite sample " << value << " at node zeta=" << zeta;
  throw Error(ErrorCode::Integration, os.str());
}

cplx integrate(const Samplable& f, const QuadRule& rule) {
  return integrate_fn([&f](cplx z) { return f(z); }, rule);
}

}  // namespace bergman
