#pragma once

namespace casimir {

// Li_s(z) = sum_{m>=1} z^m / m^s for s in {1, 2, 3} and z in [0, 1).
//
// Li_1 is the analytic closed form -ln(1-z). Li_2 and Li_3 are evaluated by
// the direct series with compensated summation; truncation after K terms is
// bounded by z^{K+1} / ((K+1)^s (1-z)) and the series is stopped when that
// bound falls below 1e-14 of the partial sum.
double polylog(int order, double z);

} // namespace casimir
