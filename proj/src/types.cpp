#include "types.hpp"

#include <cmath>

namespace casimir {

const char* model_name(model_tag m) {
    switch (m) {
        case model_tag::exact: return "exact";
        case model_tag::low_t: return "low_t";
        case model_tag::high_t: return "high_t";
        case model_tag::casimir_zero_t: return "casimir_zero_t";
        case model_tag::gold_corrected: return "gold_corrected";
    }
    return "unknown";
}

void validate_point(const query_point& p) {
    if (!std::isfinite(p.separation) || !std::isfinite(p.temperature))
        throw invalid_input_error("query point must be finite");
    if (!(p.separation > 0.0))
        throw invalid_input_error("separation must be positive");
    if (p.temperature < 0.0)
        throw invalid_input_error("temperature must be non-negative");
}

void validate_policy(const summation_policy& pol) {
    if (!(pol.relative_tolerance > 0.0) || !(pol.relative_tolerance < 1.0))
        throw invalid_input_error("relative_tolerance must lie in (0, 1)");
    if (pol.max_matsubara_terms < 1)
        throw invalid_input_error("max_matsubara_terms must be at least 1");
    if (!(pol.tau_floor > 0.0) || !std::isfinite(pol.tau_floor))
        throw invalid_input_error("tau_floor must be positive and finite");
}

} // namespace casimir
