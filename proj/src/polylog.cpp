#include "polylog.hpp"

#include <cmath>

#include "types.hpp"

namespace casimir {

double polylog(int order, double z) {
    if (order < 1 || order > 3)
        throw invalid_input_error("polylog order must be 1, 2, or 3");
    if (!(z >= 0.0) || !(z < 1.0))
        throw domain_error("polylog argument must lie in [0, 1)");
    if (z == 0.0) return 0.0;
    if (order == 1) return -std::log1p(-z);  // Li_1(z) = -ln(1-z)

    constexpr double rel_tol = 1e-14;
    const double one_minus_z = 1.0 - z;
    double sum = 0.0, comp = 0.0;  // Kahan compensation keeps ~1e5 terms at 1e-14
    double zk = 1.0;
    for (long k = 1; k <= 100000000L; ++k) {
        zk *= z;
        const double kd = static_cast<double>(k);
        const double term = (order == 2) ? zk / (kd * kd) : zk / (kd * kd * kd);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        // tail <= z^{k+1} / ((k+1)^s (1-z))
        const double kp = kd + 1.0;
        const double tail = zk * z / (((order == 2) ? kp * kp : kp * kp * kp) * one_minus_z);
        if (tail <= rel_tol * sum) return sum;
    }
    throw convergence_error("polylog series did not converge");
}

} // namespace casimir
