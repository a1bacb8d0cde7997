#pragma once

// Bergman kernels of the disc and of domains reached from it by univalent
// maps.
//
// Kernels here are taken with respect to the normalized measure dm, so the
// disc kernel is (1 - conj(zeta) z)^-2 and K(z,z) = ||K(z,.)||^2. The kernel
// with respect to plain area measure is this divided by pi; area_measure()
// and riemann_deriv_area_measure() bridge to that convention.

#include <functional>
#include <string>

#include "bergman/disc.hpp"

namespace bergman {

/// Reproducing kernel K(z, zeta) of some domain, z and zeta in the domain.
using KernelFn = std::function<cplx(cplx z, cplx zeta)>;

/// (1 - conj(zeta) z)^-(alpha+2) on the principal branch; Re(1 - conj(zeta) z) > 0
/// on the disc, so the branch is unambiguous. alpha = 0 is the Bergman kernel,
/// general alpha the kernel of dm_alpha.
cplx k_disc(DiscPoint z, DiscPoint zeta, Weight alpha);

// Unchecked evaluation for inner loops; |z|, |zeta| < 1 is the caller's job.
cplx k_disc_unchecked(cplx z, cplx zeta, double alpha) noexcept;

/// Partial sum of the orthonormal-basis expansion, sum_{n<=N} (n+1) (z conj(zeta))^n.
cplx k_series(DiscPoint z, DiscPoint zeta, std::size_t N);

struct MobiusValue {
  cplx value;
  cplx deriv;
};

/// The involution phi_a(w) = (a - w) / (1 - conj(a) w) and its derivative
/// -(1 - |a|^2) / (1 - conj(a) w)^2. The derivative is often quoted without
/// the minus sign; only |phi_a'| enters the metric identity
/// 1 - |phi_a(w)|^2 = |phi_a'(w)| (1 - |w|^2), so that usage is unaffected.
MobiusValue mobius(DiscPoint a, DiscPoint w);

/// Disc kernel as a KernelFn; arguments outside the disc raise a Domain error.
KernelFn disc_kernel(Weight alpha = Weight(0.0));

/// Converts a dm-normalized kernel to the plain-area convention (divides by pi).
KernelFn area_measure(KernelFn k);

/// Univalent map psi from the disc onto a domain, with its derivative.
///
/// The constructor checks psi' against a central difference of psi at a few
/// probe points (|psi'_fd - psi'| <= 1e-6 max(1, |psi'|)); evaluating the
/// derivative where it vanishes raises a Domain error.
class DomainMap {
 public:
  DomainMap(std::function<cplx(cplx)> psi, std::function<cplx(cplx)> psi_deriv, std::string name);

  static DomainMap identity();
  // w -> -phi_a(w) = (w - a)/(1 - conj(a) w), which sends a to 0.
  static DomainMap disc_automorphism(DiscPoint a);
  // psi(z) = (i (1+z)/(1-z))^2, onto the plane slit along [0, inf).
  static DomainMap slit_plane();

  cplx operator()(cplx z) const { return psi_(z); }
  cplx deriv(cplx z) const;
  const std::string& name() const noexcept { return name_; }

 private:
  std::function<cplx(cplx)> psi_;
  std::function<cplx(cplx)> psi_deriv_;
  std::string name_;
};

/// Kernel of the source disc from the kernel J of the image domain:
/// J(psi(z), psi(zeta)) psi'(z) conj(psi'(zeta)).
cplx pullback_kernel(const DomainMap& map, const KernelFn& target_kernel, DiscPoint z, DiscPoint zeta);

/// Bergman kernel of the slit plane C \ [0, inf), obtained by pushing the disc
/// kernel forward through the inverse of DomainMap::slit_plane().
KernelFn slit_plane_kernel();

/// Derivative at z of the Riemann map phi of the domain onto the disc with
/// phi(base) = 0, phi'(base) > 0: K(z, base) / sqrt(K(base, base)) for a
/// dm-normalized kernel. Fails unless K(base, base) is positive real to 1e-10.
cplx riemann_deriv(const KernelFn& domain_kernel, cplx base, cplx z);

/// Same derivative from a plain-area kernel: sqrt(pi / K(base,base)) K(z, base).
cplx riemann_deriv_area_measure(const KernelFn& area_kernel, cplx base, cplx z);

}  // namespace bergman
