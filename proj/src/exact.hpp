#pragma once

#include "types.hpp"

namespace casimir {

// Exact finite-temperature free energy per unit area for ideal-conductor
// plates, from the Matsubara mode sum with the m-sum folded into
// polylogarithms:
//
//   E(l,T) = -(kT/pi) [ zeta(3)/(8 l^2)
//               + sum_{n>=1} ( x_n/(2l) Li_2(e^{-2 l x_n})
//                              + 1/(4 l^2) Li_3(e^{-2 l x_n}) ) ],
//   x_n = 2 pi n k T / (hbar c).
//
// Derivation: each Matsubara mode contributes (kT/pi) int_{x_n}^inf
// q ln(1 - e^{-2ql}) dq (the n = 0 mode with weight 1/2); expanding the
// logarithm and integrating term by term gives the polylogarithm form, and
// the n = 0 mode evaluates to -kT zeta(3)/(8 pi l^2).
//
// The n-sum stops when the next term's majorant falls below
// relative_tolerance x |partial sum|; truncation_error is the certified
// closed-form geometric tail bound on everything omitted.
//
// T = 0 returns the zero-temperature Casimir value analytically (the mode
// spacing degenerates); 0 < tau < policy.tau_floor is a domain error that
// directs the caller to the low-temperature expansion.
energy_result exact_energy(const query_point& p, const summation_policy& policy);

// Term-wise analytic -dE/dl of the same sum; every summand is negative:
//
//   P(l,T) = -(kT/pi) [ zeta(3)/(4 l^3)
//               + sum_{n>=1} ( x_n^2 Li_1(z_n)/l + x_n Li_2(z_n)/l^2
//                              + Li_3(z_n)/(2 l^3) ) ],  z_n = e^{-2 l x_n}.
pressure_result exact_pressure(const query_point& p, const summation_policy& policy);

} // namespace casimir
