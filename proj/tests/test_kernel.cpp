#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bergman/error.hpp"
#include "bergman/kernel.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/random.hpp"

using namespace bergman;

namespace {

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

DiscPoint random_point(SeededRng& rng, double max_abs) {
  return DiscPoint(std::polar(max_abs * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform()));
}

// Inverse of psi(z) = -((1+z)/(1-z))^2 and its derivative.
cplx slit_inverse(cplx w) {
  const cplx s = std::sqrt(-w);
  return (s - 1.0) / (s + 1.0);
}
cplx slit_inverse_deriv(cplx w) {
  const cplx s = std::sqrt(-w);
  return -1.0 / (s * (s + 1.0) * (s + 1.0));
}

}  // namespace

TEST_CASE("closed-form disc kernel") {
  CHECK(near(k_disc(DiscPoint(0.0), DiscPoint(cplx(0.3, -0.6)), Weight(0.0)), 1.0, 0.0));
  CHECK(near(k_disc(DiscPoint(0.5), DiscPoint(0.5), Weight(0.0)), 16.0 / 9.0, 1e-14));
  CHECK(near(k_disc(DiscPoint(0.3), DiscPoint(0.3), Weight(1.0)), std::pow(0.91, -3.0), 1e-14));
  CHECK(near(k_disc(DiscPoint(0.3), DiscPoint(0.3), Weight(0.5)), std::pow(0.91, -2.5), 1e-14));
}

TEST_CASE("kernel series") {
  CHECK(near(k_series(DiscPoint(0.0), DiscPoint(0.9), 0), 1.0, 0.0));
  CHECK(near(k_series(DiscPoint(0.5), DiscPoint(0.5), 100), 16.0 / 9.0, 1e-10));
  const cplx w(0.0, 0.02);
  CHECK(near(k_series(DiscPoint(cplx(0.0, 0.2)), DiscPoint(0.1), 3), 1.0 + 2.0 * w + 3.0 * w * w + 4.0 * w * w * w,
             1e-16));
}

TEST_CASE("hermitian symmetry and positive diagonal") {
  SeededRng rng(3, "kernel");
  for (int i = 0; i < 200; ++i) {
    const DiscPoint z = random_point(rng, 0.99);
    const DiscPoint w = random_point(rng, 0.99);
    const Weight alpha(rng.uniform(-0.9, 4.0));
    CHECK(k_disc(z, w, alpha) == std::conj(k_disc(w, z, alpha)));
    const cplx d = k_disc(z, z, alpha);
    CHECK(d.real() > 0.0);
    CHECK(d.imag() == 0.0);
  }
}

TEST_CASE("unchecked kernel agrees with the checked one") {
  SeededRng rng(4, "kernel-fast");
  for (const double alpha : {0.0, 1.0, 2.0, 0.5, 16.0, 17.0}) {
    for (int i = 0; i < 20; ++i) {
      const DiscPoint z = random_point(rng, 0.95);
      const DiscPoint w = random_point(rng, 0.95);
      const cplx a = k_disc(z, w, Weight(alpha));
      CHECK(std::abs(k_disc_unchecked(z.value(), w.value(), alpha) - a) <= 1e-12 * std::abs(a));
    }
  }
}

TEST_CASE("mobius") {
  CHECK(near(mobius(DiscPoint(0.3), DiscPoint(0.0)).value, 0.3, 1e-16));
  CHECK(near(mobius(DiscPoint(0.0), DiscPoint(cplx(0, 0.5))).value, cplx(0, -0.5), 1e-16));
  const MobiusValue m = mobius(DiscPoint(0.5), DiscPoint(0.5));
  CHECK(near(m.value, 0.0, 1e-16));
  CHECK(near(m.deriv, -4.0 / 3.0, 1e-15));

  SeededRng rng(9, "mobius");
  for (int i = 0; i < 100; ++i) {
    const DiscPoint a = random_point(rng, 0.95);
    const DiscPoint w = random_point(rng, 0.95);
    const MobiusValue v = mobius(a, w);
    CHECK(std::abs(1.0 - std::norm(v.value) - std::abs(v.deriv) * (1.0 - std::norm(w.value()))) <= 1e-12);
    // involution
    CHECK(near(mobius(a, DiscPoint(v.value)).value, w.value(), 1e-12));
    // derivative against a central difference
    const double h = 1e-6;
    const cplx fd = (mobius(a, DiscPoint(w.value() + h)).value - mobius(a, DiscPoint(w.value() - h)).value) / (2 * h);
    CHECK(std::abs(fd - v.deriv) <= 1e-5 * std::max(1.0, std::abs(v.deriv)));
  }
}

TEST_CASE("domain maps") {
  const DomainMap id = DomainMap::identity();
  CHECK(near(pullback_kernel(id, disc_kernel(), DiscPoint(0.4), DiscPoint(0.2)),
             k_disc(DiscPoint(0.4), DiscPoint(0.2), Weight(0.0)), 0.0));

  CHECK_THROWS_AS(DomainMap([](cplx z) { return z * z; }, [](cplx z) { return 3.0 * z; }, "wrong"), Error);
  const DomainMap sq([](cplx z) { return z * z + 2.0 * z; }, [](cplx z) { return 2.0 * z + 2.0; }, "sq");
  CHECK_THROWS_AS(sq.deriv(-1.0), Error);
}

TEST_CASE("automorphism invariance of the disc kernel") {
  const KernelFn j = disc_kernel();
  CHECK(near(pullback_kernel(DomainMap::disc_automorphism(DiscPoint(0.5)), j, DiscPoint(0.1), DiscPoint(0.3)),
             k_disc(DiscPoint(0.1), DiscPoint(0.3), Weight(0.0)), 1e-12));
  SeededRng rng(12, "pullback");
  for (const cplx a : {cplx(0.0), cplx(0.3), cplx(0.6, 0.2)}) {
    const DomainMap map = DomainMap::disc_automorphism(DiscPoint(a));
    for (int i = 0; i < 30; ++i) {
      const DiscPoint z = random_point(rng, 0.6);
      const DiscPoint w = random_point(rng, 0.6);
      CHECK(near(pullback_kernel(map, j, z, w), k_disc(z, w, Weight(0.0)), 1e-12));
    }
  }
}

TEST_CASE("slit plane kernel pulls back to the disc kernel") {
  const DomainMap psi = DomainMap::slit_plane();
  CHECK(near(psi(0.0), -1.0, 1e-15));
  const KernelFn slit = slit_plane_kernel();
  const cplx at0 = pullback_kernel(psi, slit, DiscPoint(0.0), DiscPoint(0.0));
  CHECK(at0.real() > 0.0);
  CHECK(std::abs(at0.imag()) <= 1e-14);
  CHECK(near(at0, 1.0, 1e-12));
  SeededRng rng(13, "slit");
  for (int i = 0; i < 30; ++i) {
    const DiscPoint z = random_point(rng, 0.7);
    const DiscPoint w = random_point(rng, 0.7);
    const cplx k = k_disc(z, w, Weight(0.0));
    CHECK(std::abs(pullback_kernel(psi, slit, z, w) - k) <= 1e-10 * std::abs(k));
  }
}

TEST_CASE("riemann map derivative of the disc") {
  const KernelFn k = disc_kernel();
  CHECK(near(riemann_deriv(k, 0.0, 0.7), 1.0, 1e-15));
  CHECK(near(riemann_deriv(k, 0.5, 0.0), 0.75, 1e-15));
  CHECK(near(riemann_deriv(k, 0.5, 0.5), 4.0 / 3.0, 1e-15));
  const cplx a(0.2, -0.4);
  for (int i = 0; i < 10; ++i) {
    const cplx z = std::polar(0.08 * i, 1.3 * i);
    const cplx d = 1.0 - std::conj(a) * z;
    CHECK(near(riemann_deriv(k, a, z), (1.0 - std::norm(a)) / (d * d), 1e-12));
  }
  const cplx at_base = riemann_deriv(k, a, a);
  CHECK(at_base.real() > 0.0);
  CHECK(std::abs(at_base.imag()) <= 1e-15);
}

TEST_CASE("area-measure bridge restores the pi factor") {
  const KernelFn k = disc_kernel();
  const KernelFn ka = area_measure(k);
  CHECK(near(ka(0.3, 0.1) * std::numbers::pi, k(0.3, 0.1), 1e-14));
  CHECK(near(riemann_deriv_area_measure(ka, 0.5, cplx(0.1, 0.2)), riemann_deriv(k, 0.5, cplx(0.1, 0.2)), 1e-14));
}

TEST_CASE("riemann map derivative of the slit plane") {
  const KernelFn k = slit_plane_kernel();
  const cplx w0(-2.0, 0.5);
  const cplx b = slit_inverse(w0);
  const cplx d0 = slit_inverse_deriv(w0);
  const cplx rot = std::conj(d0) / std::abs(d0);
  for (const cplx w : {cplx(-1.0), cplx(-0.5, 1.0), cplx(3.0, -0.2), w0}) {
    const cplx zeta = slit_inverse(w);
    const cplx den = 1.0 - std::conj(b) * zeta;
    const cplx expected = rot * (1.0 - std::norm(b)) / (den * den) * slit_inverse_deriv(w);
    const cplx got = riemann_deriv(k, w0, w);
    CHECK(std::abs(got - expected) <= 1e-10 * std::abs(expected));
  }
  CHECK(std::abs(riemann_deriv(k, w0, w0).imag()) <= 1e-12);
}

TEST_CASE("kernel norm identity and extremal function") {
  const QuadRule rule = QuadRule::build(64, 256, Weight(0.0));
  for (const double r : {0.0, 0.4, 0.8}) {
    const cplx z = std::polar(r, 0.7);
    const cplx n2 = integrate_fn([&](cplx w) { return cplx(std::norm(k_disc_unchecked(z, w, 0.0))); }, rule);
    const double diag = k_disc(DiscPoint(z), DiscPoint(z), Weight(0.0)).real();
    CHECK(std::abs(n2 - diag) <= 1e-8);
    const cplx f2 = integrate_fn([&](cplx w) { return cplx(std::norm(k_disc_unchecked(w, z, 0.0) / diag)); }, rule);
    CHECK(std::abs(std::sqrt(f2.real()) - 1.0 / std::sqrt(diag)) <= 1e-8);
  }
}
