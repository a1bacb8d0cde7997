#pragma once

// Reference values computed independently of the library (30-digit mpmath
// series and Beta integrals, SciPy Gauss-Jacobi roots) and frozen here.

namespace oracle {

// Gauss-Jacobi, 3 nodes, weight (1-u)^0.5 on (0,1), weights normalized to 1.
inline constexpr double gj3_u[] = {0.09919417072837067, 0.45013150078355646, 0.8352897131034576};
inline constexpr double gj3_w[] = {0.34992243698387243, 0.4614035515228691, 0.18867401149325838};

// n! Gamma(alpha+2) / Gamma(n+alpha+2)
inline constexpr double wmn_200_half = 0.00046562169118411722558;
inline constexpr double wmn_7_2p5 = 0.0049266179297139049461;

// sum_n a^(2n)/(n+1) = int |1 - a zeta|^-2 dm
inline constexpr double blowup_05 = 1.1507282898071237098;
inline constexpr double blowup_07 = 1.3741725576811542039;
inline constexpr double blowup_09 = 2.0502854405205568351;
inline constexpr double blowup_099 = 3.9965672352328226989;

// int (1-|zeta|^2)^(t-2) |1 - conj(z) zeta|^-s dm and its ratio to (1-|z|^2)^(t-s)
struct FR {
  double z, s, t, integral, ratio;
};
inline constexpr FR forelli_rudin[] = {
    {0.0, 2.0, 1.5, 2.0, 2.0},
    {0.0, 3.0, 2.0, 1.0, 1.0},
    {0.5, 3.0, 2.0, 1.3795088245938222384, 1.0346316184453666788},
    {0.9, 3.0, 2.0, 6.1088421453436981692, 1.160680007615302408},
    {0.95, 3.0, 2.0, 12.302039623815574214, 1.1994488633220195239},
    {0.5, 2.0, 1.5, 2.4183991523122904675, 2.0943951023931954923},
    {0.95, 4.0, 2.5, 25.007287113522999163, 0.76133098260046127404},
};

}  // namespace oracle
