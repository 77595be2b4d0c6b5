#include "exact.hpp"

#include <cmath>
#include <string>

#include "asymptotics.hpp"
#include "constants.hpp"
#include "polylog.hpp"
#include "units.hpp"

namespace casimir {

namespace {

using pc = physical_constants;

// Kahan-compensated accumulator.
struct compensated_sum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Closed-form geometric tails over the omitted modes m > n:
//   S_p(n) = sum_{m>n} m^p q^m, p = 0, 1, 2.
struct mode_tails {
    double s0, s1, s2;
};

mode_tails tails_beyond(double q, double q_np1, double np1) {
    const double r = 1.0 - q;
    mode_tails t;
    t.s0 = q_np1 / r;
    t.s1 = q_np1 * (np1 / r + q / (r * r));
    t.s2 = q_np1 * (np1 * np1 / r + 2.0 * np1 * q / (r * r) + q * (1.0 + q) / (r * r * r));
    return t;
}

double checked_tau(const query_point& p, const summation_policy& policy) {
    const double t = tau(p);
    if (t < policy.tau_floor)
        throw domain_error("tau = " + fmt17(t) + " is below the summation floor " +
                           fmt17(policy.tau_floor) +
                           "; use the low-temperature expansion there");
    return t;
}

[[noreturn]] void throw_budget_exhausted(const summation_policy& policy) {
    throw convergence_error("Matsubara sum did not reach tolerance within " +
                            std::to_string(policy.max_matsubara_terms) + " terms");
}

} // namespace

energy_result exact_energy(const query_point& p, const summation_policy& policy) {
    validate_point(p);
    validate_policy(policy);
    const double l = p.separation;
    const double T = p.temperature;
    if (T == 0.0) {
        // analytic zero-temperature limit; the mode spacing degenerates
        return {casimir_energy(l), model_tag::exact, 0.0, false, {}};
    }
    checked_tau(p, policy);

    const double kt = pc::boltzmann * T;
    const double x1 = 2.0 * pi * kt / pc::hbar_c;  // x_n = n x1
    const double q = std::exp(-2.0 * l * x1);      // mode ratio e^{-2 pi tau}
    const double l2 = l * l;

    // bracket B with E = -(kT/pi) B; n = 0 mode carries weight 1/2
    compensated_sum bracket;
    bracket.add(pc::zeta3 / (8.0 * l2));

    long n = 0;
    double z_next = q;  // e^{-2 l x_{n+1}}
    for (;;) {
        const double np1 = static_cast<double>(n + 1);
        // term_{n+1} <= (x_{n+1}/(2l)) zeta(2) z + zeta(3)/(4 l^2) z
        const double next_bound =
            (x1 * np1 / (2.0 * l)) * pc::zeta2 * z_next + pc::zeta3 / (4.0 * l2) * z_next;
        if (next_bound <= policy.relative_tolerance * bracket.sum) break;
        if (n + 1 > policy.max_matsubara_terms) throw_budget_exhausted(policy);
        ++n;
        const double xn = x1 * static_cast<double>(n);
        bracket.add(xn / (2.0 * l) * polylog(2, z_next) + polylog(3, z_next) / (4.0 * l2));
        z_next = std::exp(-2.0 * l * x1 * (static_cast<double>(n) + 1.0));
    }

    const auto tails = tails_beyond(q, z_next, static_cast<double>(n) + 1.0);
    const double tail_bound =
        (x1 / (2.0 * l)) * pc::zeta2 * tails.s1 + pc::zeta3 / (4.0 * l2) * tails.s0;

    const double scale = kt / pi;
    return {-scale * bracket.sum, model_tag::exact, scale * tail_bound, false, {}};
}

pressure_result exact_pressure(const query_point& p, const summation_policy& policy) {
    validate_point(p);
    validate_policy(policy);
    const double l = p.separation;
    const double T = p.temperature;
    if (T == 0.0) {
        return {casimir_pressure(l), model_tag::exact, 0.0};
    }
    checked_tau(p, policy);

    const double kt = pc::boltzmann * T;
    const double x1 = 2.0 * pi * kt / pc::hbar_c;
    const double q = std::exp(-2.0 * l * x1);
    const double l2 = l * l;
    const double l3 = l2 * l;
    const double one_minus_q = 1.0 - q;

    compensated_sum bracket;
    bracket.add(pc::zeta3 / (4.0 * l3));

    long n = 0;
    double z_next = q;
    for (;;) {
        const double np1 = static_cast<double>(n + 1);
        const double xnp1 = x1 * np1;
        // Li_1(z) <= z/(1-z) <= z/(1-q) for z = q^{n+1}
        const double next_bound = xnp1 * xnp1 * z_next / (l * one_minus_q) +
                                  xnp1 * pc::zeta2 * z_next / l2 +
                                  pc::zeta3 * z_next / (2.0 * l3);
        if (next_bound <= policy.relative_tolerance * bracket.sum) break;
        if (n + 1 > policy.max_matsubara_terms) throw_budget_exhausted(policy);
        ++n;
        const double xn = x1 * static_cast<double>(n);
        bracket.add(xn * xn * polylog(1, z_next) / l + xn * polylog(2, z_next) / l2 +
                    polylog(3, z_next) / (2.0 * l3));
        z_next = std::exp(-2.0 * l * x1 * (static_cast<double>(n) + 1.0));
    }

    const auto tails = tails_beyond(q, z_next, static_cast<double>(n) + 1.0);
    const double tail_bound = x1 * x1 * tails.s2 / (l * one_minus_q) +
                              x1 * pc::zeta2 * tails.s1 / l2 +
                              pc::zeta3 * tails.s0 / (2.0 * l3);

    const double scale = kt / pi;
    return {-scale * bracket.sum, model_tag::exact, scale * tail_bound};
}

} // namespace casimir
