#pragma once

#include "types.hpp"

namespace casimir {

// Zero-temperature ideal-conductor values.
double casimir_energy(double separation);   // -pi^2 hbar c / (720 l^3), J/m^2
double casimir_pressure(double separation); // -pi^2 hbar c / (240 l^4), Pa
energy_result casimir_energy_result(double separation);
pressure_result casimir_pressure_result(double separation);

// Low-temperature / small-distance expansion: the four-term sum
//   -pi^2 hbar c/(720 l^3) - zeta(3)(kT)^3/(2 pi (hbar c)^2)
//   + (kT)^4 pi^2 l/(45 (hbar c)^3)
//   - ((kT)^2/(hbar c l)) (1 + kT l/(pi hbar c)) e^{-pi hbar c/(k T l)}
// with a certified bound on the omitted exponentially small remainder.
energy_result low_t_energy(const query_point& p);
pressure_result low_t_pressure(const query_point& p);

// High-temperature / large-distance expansion:
//   -(kT/(8 pi l^2)) [zeta(3) + (2u + 2) e^{-u}],  u = 4 pi k T l / (hbar c),
// again with a certified remainder bound. T = 0 is a domain error.
energy_result high_t_energy(const query_point& p);
pressure_result high_t_pressure(const query_point& p);

struct ratio_triple {
    double ratio_2_to_1 = 0.0;
    double ratio_3_to_1 = 0.0;
    double ratio_4_to_1 = 0.0;
};

// Closed-form term ratios of the low-temperature expansion:
//   ratio_2_to_1 = (360 zeta(3)/pi^3) (k T l/(hbar c))^3,
//   ratio_3_to_1 = 16 (k T l/(hbar c))^4,
// and ratio_4_to_1 by direct term evaluation.
ratio_triple term_ratios(const query_point& p);

} // namespace casimir
