#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bergman/disc.hpp"
#include "bergman/error.hpp"
#include "bergman/random.hpp"
#include "oracles.hpp"

using namespace bergman;
using doctest::Approx;

namespace {

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("disc point rejects the boundary and non-finite values") {
  CHECK_NOTHROW(DiscPoint(cplx(0.3, 0.4)));
  CHECK_THROWS_AS(DiscPoint(1.0), Error);
  CHECK_THROWS_AS(DiscPoint(cplx(0.6, 0.8)), Error);
  CHECK_THROWS_AS(DiscPoint(cplx(NAN, 0.0)), Error);
  try {
    DiscPoint p(2.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
}

TEST_CASE("weight and exponent validation") {
  CHECK_THROWS_AS(Weight(-1.0), Error);
  CHECK(Weight(-0.5).alpha() == -0.5);
  CHECK_THROWS_AS(Exponent(0.0), Error);
  CHECK(Exponent(2.0).conjugate() == Approx(2.0));
  CHECK(Exponent(1.5).conjugate() == Approx(3.0));
  CHECK_THROWS_AS(Exponent(1.0).conjugate(), Error);
  CHECK_THROWS_AS(Exponent(0.5).require_at_least(1.0), Error);
}

TEST_CASE("eval_poly") {
  CHECK(near(eval_poly(TaylorPoly{0.0, 1.0}, cplx(0.3, 0.4)), cplx(0.3, 0.4), 1e-15));
  CHECK(near(eval_poly(TaylorPoly{5.0}, cplx(-0.7, 0.1)), 5.0, 0.0));
  CHECK(near(eval_poly(TaylorPoly{1.0, 0.0, 2.0}, 0.5), 1.5, 1e-15));
}

TEST_CASE("trailing zeros are inert") {
  CHECK(TaylorPoly{1.0, 2.0, 0.0, 0.0} == TaylorPoly{1.0, 2.0});
  CHECK(TaylorPoly{0.0, 0.0}.is_zero());
  CHECK(TaylorPoly{0.0, 0.0, 3.0}.degree() == 2);
}

TEST_CASE("differentiate") {
  CHECK(differentiate(TaylorPoly{0.0, 0.0, 1.0}, 1) == TaylorPoly{0.0, 2.0});
  const TaylorPoly f{1.0, cplx(0, 2), 3.0};
  CHECK(differentiate(f, 0) == f);
  CHECK(differentiate(TaylorPoly{1.0, 1.0, 1.0, 1.0}, 2) == TaylorPoly{2.0, 6.0});
  CHECK(differentiate(TaylorPoly{1.0, 1.0}, 5).is_zero());
}

TEST_CASE("partial_sum") {
  CHECK(partial_sum(TaylorPoly{1.0, 2.0, 3.0}, 1) == TaylorPoly{1.0, 2.0});
  CHECK(partial_sum(TaylorPoly{1.0, 2.0, 3.0}, 5) == TaylorPoly{1.0, 2.0, 3.0});
  CHECK(partial_sum(TaylorPoly{0.0, 0.0, 0.0, 4.0}, 2).is_zero());
}

TEST_CASE("dilate") {
  CHECK(dilate(TaylorPoly{0.0, 0.0, 1.0}, 0.5) == TaylorPoly{0.0, 0.0, 0.25});
  const TaylorPoly f{1.0, cplx(0.5, -1), 2.0};
  CHECK(dilate(f, 1.0) == f);
  CHECK(dilate(TaylorPoly{1.0, 1.0}, 0.9) == TaylorPoly{1.0, 0.9});
  CHECK_THROWS_AS(dilate(f, 0.0), Error);
  CHECK_THROWS_AS(dilate(f, 1.5), Error);
}

TEST_CASE("a2_norm_sq") {
  CHECK(a2_norm_sq(TaylorPoly{1.0}) == Approx(1.0));
  CHECK(a2_norm_sq(TaylorPoly::monomial(3)) == Approx(0.25));
  CHECK(a2_norm_sq(TaylorPoly{1.0, 2.0}) == Approx(3.0));
  CHECK(a2_norm_sq(TaylorPoly{}) == 0.0);
}

TEST_CASE("weighted_monomial_norm_sq") {
  CHECK(weighted_monomial_norm_sq(0, Weight(0.0)) == Approx(1.0));
  CHECK(weighted_monomial_norm_sq(0, Weight(3.7)) == Approx(1.0));
  CHECK(weighted_monomial_norm_sq(1, Weight(1.0)) == Approx(1.0 / 3.0));
  CHECK(weighted_monomial_norm_sq(3, Weight(0.0)) == Approx(0.25));
  CHECK(weighted_monomial_norm_sq(7, Weight(2.5)) == Approx(oracle::wmn_7_2p5).epsilon(1e-13));
  // lgamma branch
  CHECK(weighted_monomial_norm_sq(200, Weight(0.5)) == Approx(oracle::wmn_200_half).epsilon(1e-11));
  for (std::size_t n = 0; n <= 30; ++n)
    CHECK(weighted_monomial_norm_sq(n, Weight(0.0)) == Approx(1.0 / (n + 1.0)).epsilon(1e-12));
}

TEST_CASE("fourier_coeff") {
  CHECK(near(fourier_coeff(TaylorPoly{0.0, 1.0}, 1), 1.0 / std::sqrt(2.0), 1e-15));
  CHECK(fourier_coeff(TaylorPoly{0.0, 1.0}, 3) == cplx(0.0));
  CHECK(near(fourier_coeff(TaylorPoly{2.0, 0.0, cplx(0, 6)}, 2), cplx(0, 6) / std::sqrt(3.0), 1e-15));
}

TEST_CASE("coefficient identities on random polynomials") {
  SeededRng rng(11, "disc-props");
  for (int trial = 0; trial < 200; ++trial) {
    const TaylorPoly f = random_poly(rng, 15);
    CAPTURE(trial);

    double parseval = 0.0;
    for (std::size_t n = 0; n <= f.degree(); ++n) parseval += std::norm(fourier_coeff(f, n));
    CHECK(parseval == Approx(a2_norm_sq(f)).epsilon(1e-12));

    const double r1 = rng.uniform(0.1, 1.0);
    const double r2 = rng.uniform(0.1, 1.0);
    const TaylorPoly twice = dilate(dilate(f, r1), r2);
    const TaylorPoly once = dilate(f, r1 * r2);
    for (std::size_t n = 0; n <= f.degree(); ++n) CHECK(near(twice.coeff(n), once.coeff(n), 1e-15));

    const std::size_t N = rng.below(16);
    const std::size_t k = rng.below(N + 1);
    CHECK(differentiate(partial_sum(f, N), k) == partial_sum(differentiate(f, k), N - k));

    double tail = 0.0;
    for (std::size_t n = N + 1; n <= f.degree(); ++n) tail += std::norm(f.coeff(n)) / (n + 1.0);
    CHECK(std::abs(a2_norm_sq(f - partial_sum(f, N)) - tail) <= 1e-13);
  }
}
