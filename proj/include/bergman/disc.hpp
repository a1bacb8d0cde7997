#pragma once

// Coefficient-level arithmetic on the unit disc.
//
// Measure convention: every integral in the library is taken against the
// normalized area measure dm = dA/pi, so the disc has total mass one and the
// weighted measures are dm_alpha = (alpha+1)(1-|z|^2)^alpha dm. Formulas that
// are usually quoted for plain area measure dA pick up a factor of pi when
// converted: a norm computed with dA is pi^(1/p) times the dm norm, and a
// reproducing kernel for dA is the dm kernel divided by pi. Under dm the
// growth bound for A^p reads |f(z)| <= (1-|z|)^(-2/p) ||f||, with no pi.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

/// A point of the open unit disc. Construction rejects |z| >= 1 and
/// non-finite input.
class DiscPoint {
 public:
  explicit DiscPoint(cplx value);
  DiscPoint(double re, double im = 0.0) : DiscPoint(cplx(re, im)) {}

  cplx value() const noexcept { return value_; }
  double abs() const noexcept { return std::abs(value_); }

 private:
  cplx value_;
};

/// Weight exponent alpha of dm_alpha; alpha > -1.
class Weight {
 public:
  explicit Weight(double alpha);

  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Integrability exponent p > 0. Operations that need a conjugate exponent
/// (projections, Schur's test) call conjugate(), which requires p > 1.
class Exponent {
 public:
  explicit Exponent(double p);

  double p() const noexcept { return p_; }
  double conjugate() const;
  // Throws unless p >= bound; used by operations with p >= 1 preconditions.
  const Exponent& require_at_least(double bound) const;

 private:
  double p_;
};

/// Finite Taylor polynomial f(z) = sum a_n z^n. Trailing zero coefficients
/// are trimmed on construction, so the zero polynomial has no coefficients
/// and equality is coefficientwise.
class TaylorPoly {
 public:
  TaylorPoly() = default;
  explicit TaylorPoly(std::vector<cplx> coeffs);
  TaylorPoly(std::initializer_list<cplx> coeffs) : TaylorPoly(std::vector<cplx>(coeffs)) {}

  static TaylorPoly monomial(std::size_t n, cplx c = 1.0);

  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  cplx operator()(cplx z) const noexcept;

  friend TaylorPoly operator+(const TaylorPoly& a, const TaylorPoly& b);
  friend TaylorPoly operator-(const TaylorPoly& a, const TaylorPoly& b);
  friend TaylorPoly operator*(cplx s, const TaylorPoly& a);
  friend bool operator==(const TaylorPoly& a, const TaylorPoly& b) = default;

 private:
  std::vector<cplx> coeffs_;
};

cplx eval_poly(const TaylorPoly& f, cplx z) noexcept;

/// n-th derivative; coefficient m-n becomes m(m-1)...(m-n+1) a_m.
TaylorPoly differentiate(const TaylorPoly& f, std::size_t n);

/// Truncation to indices 0..N.
TaylorPoly partial_sum(const TaylorPoly& f, std::size_t N);

/// f_rho(z) = f(rho z), 0 < rho <= 1.
TaylorPoly dilate(const TaylorPoly& f, double rho);

/// Squared A^2 norm, sum |a_n|^2 / (n+1).
double a2_norm_sq(const TaylorPoly& f) noexcept;

/// Coefficient against the orthonormal basis sqrt(n+1) z^n, a_n / sqrt(n+1).
cplx fourier_coeff(const TaylorPoly& f, std::size_t n) noexcept;

/// Integral of |z|^(2n) against dm_alpha: n! Gamma(alpha+2) / Gamma(n+alpha+2).
double weighted_monomial_norm_sq(std::size_t n, Weight alpha);

}  // namespace bergman
