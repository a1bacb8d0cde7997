#include "bergman/disc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bergman/error.hpp"

namespace bergman {

namespace {

std::vector<cplx> trimmed(std::vector<cplx> c) {
  while (!c.empty() && c.back() == cplx{}) c.pop_back();
  return c;
}

}  // namespace

DiscPoint::DiscPoint(cplx value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || std::abs(value) >= 1.0) {
    std::ostringstream os;
    os << "point " << value << " is not inside the open unit disc";
    throw Error(ErrorCode::Domain, os.str());
  }
}

Weight::Weight(double alpha) : alpha_(alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw Error(ErrorCode::Domain, "weight alpha must satisfy alpha > -1, got " + std::to_string(alpha));
}

Exponent::Exponent(double p) : p_(p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw Error(ErrorCode::Domain, "exponent p must be positive and finite, got " + std::to_string(p));
}

double Exponent::conjugate() const {
  if (!(p_ > 1.0))
    throw Error(ErrorCode::Domain, "conjugate exponent requires p > 1, got " + std::to_string(p_));
  return p_ / (p_ - 1.0);
}

const Exponent& Exponent::require_at_least(double bound) const {
  if (p_ < bound) {
    std::ostringstream os;
    os << "exponent p must be >= " << bound << ", got " << p_;
    throw Error(ErrorCode::Domain, os.str());
  }
  return *this;
}

TaylorPoly::TaylorPoly(std::vector<cplx> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

TaylorPoly TaylorPoly::monomial(std::size_t n, cplx c) {
  std::vector<cplx> v(n + 1);
  v[n] = c;
  return TaylorPoly(std::move(v));
}

cplx TaylorPoly::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TaylorPoly operator+(const TaylorPoly& a, const TaylorPoly& b) {
  std::vector<cplx> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return TaylorPoly(std::move(out));
}

TaylorPoly operator-(const TaylorPoly& a, const TaylorPoly& b) {
  std::vector<cplx> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return TaylorPoly(std::move(out));
}

TaylorPoly operator*(cplx s, const TaylorPoly& a) {
  std::vector<cplx> out(a.coeffs_);
  for (auto& c : out) c *= s;
  return TaylorPoly(std::move(out));
}

cplx eval_poly(const TaylorPoly& f, cplx z) noexcept { return f(z); }

TaylorPoly differentiate(const TaylorPoly& f, std::size_t n) {
  const auto a = f.coeffs();
  if (n == 0) return f;
  if (a.size() <= n) return {};
  std::vector<cplx> out(a.size() - n);
  for (std::size_t m = n; m < a.size(); ++m) {
    double falling = 1.0;
    for (std::size_t k = 0; k < n; ++k) falling *= static_cast<double>(m - k);
    out[m - n] = falling * a[m];
  }
  return TaylorPoly(std::move(out));
}

TaylorPoly partial_sum(const TaylorPoly& f, std::size_t N) {
  const auto a = f.coeffs();
  const std::size_t keep = std::min(a.size(), N + 1);
  return TaylorPoly(std::vector<cplx>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(keep)));
}

TaylorPoly dilate(const TaylorPoly& f, double rho) {
  if (!(rho > 0.0 && rho <= 1.0))
    throw Error(ErrorCode::Domain, "dilation radius must lie in (0,1], got " + std::to_string(rho));
  std::vector<cplx> out(f.coeffs().begin(), f.coeffs().end());
  double scale = 1.0;
  for (auto& c : out) {
    c *= scale;
    scale *= rho;
  }
  return TaylorPoly(std::move(out));
}

double a2_norm_sq(const TaylorPoly& f) noexcept {
  const auto a = f.coeffs();
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += std::norm(a[n]) / static_cast<double>(n + 1);
  return s;
}

cplx fourier_coeff(const TaylorPoly& f, std::size_t n) noexcept {
  return f.coeff(n) / std::sqrt(static_cast<double>(n + 1));
}

double weighted_monomial_norm_sq(std::size_t n, Weight w) {
  const double alpha = w.alpha();
  // Below the Gamma overflow range the ratio is a product of factors
  // k/(k+alpha+1), each in (0, 1) for alpha > -1.
  if (static_cast<double>(n) + alpha + 2.0 <= 170.0) {
    double v = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double kd = static_cast<double>(k);
      v *= kd / (kd + alpha + 1.0);
    }
    return v;
  }
  const double nd = static_cast<double>(n);
  return std::exp(std::lgamma(nd + 1.0) + std::lgamma(alpha + 2.0) - std::lgamma(nd + alpha + 2.0));
}

}  // namespace bergman
