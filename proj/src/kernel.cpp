#include "bergman/kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/error.hpp"

namespace bergman {

cplx k_disc_unchecked(cplx z, cplx zeta, double alpha) noexcept {
  const cplx base = 1.0 - std::conj(zeta) * z;
  const double power = alpha + 2.0;
  const double rounded = std::round(power);
  if (power == rounded && rounded <= 16.0) {
    const cplx inv = 1.0 / base;
    cplx v = inv;
    for (int k = 1; k < static_cast<int>(rounded); ++k) v *= inv;
    return v;
  }
  return std::exp(-power * std::log(base));
}

cplx k_disc(DiscPoint z, DiscPoint zeta, Weight alpha) {
  return k_disc_unchecked(z.value(), zeta.value(), alpha.alpha());
}

cplx k_series(DiscPoint z, DiscPoint zeta, std::size_t N) {
  const cplx x = z.value() * std::conj(zeta.value());
  cplx sum{};
  cplx power = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    sum += static_cast<double>(n + 1) * power;
    power *= x;
  }
  return sum;
}

MobiusValue mobius(DiscPoint a, DiscPoint w) {
  const cplx av = a.value();
  const cplx wv = w.value();
  const cplx denom = 1.0 - std::conj(av) * wv;
  return {(av - wv) / denom, -(1.0 - std::norm(av)) / (denom * denom)};
}

KernelFn disc_kernel(Weight alpha) {
  return [alpha](cplx z, cplx zeta) { return k_disc(DiscPoint(z), DiscPoint(zeta), alpha); };
}

KernelFn area_measure(KernelFn k) {
  return [k = std::move(k)](cplx z, cplx zeta) { return k(z, zeta) / std::numbers::pi; };
}

DomainMap::DomainMap(std::function<cplx(cplx)> psi, std::function<cplx(cplx)> psi_deriv, std::string name)
    : psi_(std::move(psi)), psi_deriv_(std::move(psi_deriv)), name_(std::move(name)) {
  constexpr double h = 1e-5;
  const std::array<cplx, 4> probes{cplx(0.0, 0.0), cplx(0.3, 0.0), cplx(-0.2, 0.4), cplx(0.0, 0.5)};
  for (const cplx z : probes) {
    const cplx fd = (psi_(z + h) - psi_(z - h)) / (2.0 * h);
    const cplx d = deriv(z);
    if (std::abs(fd - d) > 1e-6 * std::max(1.0, std::abs(d))) {
      std::ostringstream os;
      os << "map '" << name_ << "': derivative " << d << " disagrees with finite difference " << fd
         << " at " << z;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  }
}

cplx DomainMap::deriv(cplx z) const {
  const cplx d = psi_deriv_(z);
  if (!(std::abs(d) > 0.0)) {
    std::ostringstream os;
    os << "map '" << name_ << "': derivative vanishes at " << z;
    throw Error(ErrorCode::Domain, os.str());
  }
  return d;
}

DomainMap DomainMap::identity() {
  return DomainMap([](cplx z) { return z; }, [](cplx) { return cplx(1.0); }, "identity");
}

DomainMap DomainMap::disc_automorphism(DiscPoint a) {
  const cplx av = a.value();
  return DomainMap([av](cplx w) { return (w - av) / (1.0 - std::conj(av) * w); },
                   [av](cplx w) {
                     const cplx d = 1.0 - std::conj(av) * w;
                     return (1.0 - std::norm(av)) / (d * d);
                   },
                   "disc-automorphism");
}

DomainMap DomainMap::slit_plane() {
  return DomainMap(
      [](cplx z) {
        const cplx s = cplx(0.0, 1.0) * (1.0 + z) / (1.0 - z);
        return s * s;
      },
      [](cplx z) {
        const cplx d = 1.0 - z;
        return -4.0 * (1.0 + z) / (d * d * d);
      },
      "slit-plane");
}

cplx pullback_kernel(const DomainMap& map, const KernelFn& target_kernel, DiscPoint z, DiscPoint zeta) {
  const cplx dz = map.deriv(z.value());
  const cplx dzeta = map.deriv(zeta.value());
  return target_kernel(map(z.value()), map(zeta.value())) * dz * std::conj(dzeta);
}

KernelFn slit_plane_kernel() {
  // Inverse of psi: s = sqrt(-w) with Re s > 0, z = (s-1)/(s+1), dz/dw = -1/(s (s+1)^2).
  struct Inverse {
    cplx z;
    cplx dz;
  };
  auto inverse = [](cplx w) {
    const cplx s = std::sqrt(-w);
    return Inverse{(s - 1.0) / (s + 1.0), -1.0 / (s * (s + 1.0) * (s + 1.0))};
  };
  return [inverse](cplx w, cplx omega) {
    const Inverse a = inverse(w);
    const Inverse b = inverse(omega);
    return k_disc(DiscPoint(a.z), DiscPoint(b.z), Weight(0.0)) * a.dz * std::conj(b.dz);
  };
}

namespace {

cplx checked_diagonal(const KernelFn& k, cplx base) {
  const cplx kbb = k(base, base);
  if (!(kbb.real() > 0.0) || std::abs(kbb.imag()) > 1e-10 * std::max(1.0, std::abs(kbb))) {
    std::ostringstream os;
    os << "kernel diagonal K(base,base)=" << kbb << " is not positive real";
    throw Error(ErrorCode::Domain, os.str());
  }
  return kbb;
}

}  // namespace

cplx riemann_deriv(const KernelFn& domain_kernel, cplx base, cplx z) {
  const cplx kbb = checked_diagonal(domain_kernel, base);
  return domain_kernel(z, base) / std::sqrt(kbb.real());
}

cplx riemann_deriv_area_measure(const KernelFn& area_kernel, cplx base, cplx z) {
  const cplx kbb = checked_diagonal(area_kernel, base);
  return std::sqrt(std::numbers::pi / kbb.real()) * area_kernel(z, base);
}

}  // namespace bergman
