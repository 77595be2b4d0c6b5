#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Error taxonomy shared by the whole library; mirrored one-to-one by the
// C API status codes and by the CLI exit-code classes.
enum class status_code {
    ok = 0,
    invalid = 1,      // malformed input, bad arguments, violated invariants
    domain = 2,       // mathematically outside an operation's domain
    range = 3,        // outside tabulated data (no extrapolation)
    convergence = 4,  // iteration/solver budget exhausted
};

struct error : std::runtime_error {
    status_code code;
    error(status_code c, const std::string& message)
        : std::runtime_error(message), code(c) {}
};

struct invalid_input_error : error {
    explicit invalid_input_error(const std::string& m) : error(status_code::invalid, m) {}
};
struct domain_error : error {
    explicit domain_error(const std::string& m) : error(status_code::domain, m) {}
};
struct range_error : error {
    explicit range_error(const std::string& m) : error(status_code::range, m) {}
};
struct convergence_error : error {
    explicit convergence_error(const std::string& m) : error(status_code::convergence, m) {}
};

// Which expression produced a result.
enum class model_tag { exact, low_t, high_t, casimir_zero_t, gold_corrected };

// Stable names used in all serialized output.
const char* model_name(model_tag m);

// A (separation, temperature) evaluation point, strict SI: meters and kelvin.
struct query_point {
    double separation = 0.0;   // m, > 0
    double temperature = 0.0;  // K, >= 0
};

// Controls for the Matsubara summation.
struct summation_policy {
    double relative_tolerance = 1e-12;     // in (0, 1)
    long max_matsubara_terms = 1000000;    // >= 1
    double tau_floor = 1e-3;               // exact sum delegates below this
};

// The four terms of the low-temperature expansion and their ratios to the
// leading (zero-temperature Casimir) term.
struct term_breakdown {
    double casimir_term = 0.0;      // J/m^2, -pi^2 hbar c / (720 l^3)
    double pair_term = 0.0;         // J/m^2, l-independent T^3 contribution
    double blackbody_term = 0.0;    // J/m^2, T^4 * l contribution
    double exponential_term = 0.0;  // J/m^2, e^{-pi hbar c / (k T l)} contribution
    double ratio_2_to_1 = 0.0;
    double ratio_3_to_1 = 0.0;
    double ratio_4_to_1 = 0.0;
};

// Free energy per unit area. value < 0 means attraction. truncation_error is
// a certified upper bound on |value - true value| for the model's expression.
struct energy_result {
    double value = 0.0;  // J/m^2
    model_tag model = model_tag::exact;
    double truncation_error = 0.0;  // J/m^2, >= 0, finite
    bool has_terms = false;
    term_breakdown terms{};
};

// Force per unit area under the convention P = -dE/dl; negative = attractive.
struct pressure_result {
    double value = 0.0;  // Pa
    model_tag model = model_tag::exact;
    double truncation_error = 0.0;  // Pa
};

void validate_point(const query_point& p);
void validate_policy(const summation_policy& pol);

} // namespace casimir
