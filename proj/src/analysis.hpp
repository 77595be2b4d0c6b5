#pragma once

#include <string>
#include <vector>

#include "types.hpp"

namespace casimir {

// Validity regimes of the two expansions in the thermal parameter tau:
// the low-temperature series is trusted for tau <= 0.5, the high-temperature
// one for tau >= 2, and the window between is labeled crossover.
enum class regime_label {
    low_t_valid,
    crossover,
    high_t_valid,
};

const char* regime_label_name(regime_label label);

struct regime_class {
    double tau_value;
    regime_label label;
};

regime_class classify_regime(const query_point& p);

// All closed-form models evaluated against the Matsubara sum at one point,
// with relative deviations |model - exact| / |exact|.
struct model_comparison {
    query_point point;
    double tau_value;
    double exact;
    double low_t;
    double high_t;
    double casimir;
    double rel_dev_low_t;
    double rel_dev_high_t;
    double rel_dev_casimir;
};

// requires T > 0 (the high-temperature expansion degenerates at T = 0)
model_comparison compare_models(const query_point& p, const summation_policy& policy);

// Separation l* at which the two expansions deviate equally from the exact
// sum, located by bisection on ln(l) over tau in [0.3, 3]. The deviation gap
// is negative below l* (low-T side more accurate) and positive above.
double crossover_separation(double temperature, const summation_policy& policy);

enum class sweep_scale {
    linear,
    log,
};

// A separation grid at fixed temperature, evaluated for a subset of models.
// An empty model list means {exact}.
struct sweep_spec {
    double l_start = 0.0;
    double l_stop = 0.0;
    long l_steps = 0;
    sweep_scale scale = sweep_scale::linear;
    double temperature = 0.0;
    std::vector<model_tag> models;
    bool include_correction = false;
};

// One (grid point, model) evaluation. A failed model evaluation is recorded
// in status/error and leaves the numeric fields zeroed; a correction-factor
// lookup outside the table just leaves has_correction false.
struct sweep_row {
    long grid_index = 0;
    double separation = 0.0;
    double temperature = 0.0;
    double tau_value = 0.0;
    model_tag model = model_tag::exact;
    status_code status = status_code::ok;
    std::string error;
    double energy = 0.0;
    double energy_truncation_error = 0.0;
    double pressure = 0.0;
    double pressure_truncation_error = 0.0;
    bool has_correction = false;
    double correction_factor = 0.0;
};

void validate_spec(const sweep_spec& spec);

// i-th grid separation; endpoints are returned exactly as given
double sweep_separation(const sweep_spec& spec, long i);

// models to evaluate, in canonical order, duplicates removed
std::vector<model_tag> sweep_models(const sweep_spec& spec);

sweep_row evaluate_sweep_row(const sweep_spec& spec, const summation_policy& policy,
                             long grid_index, model_tag model);

// full grid, row order: grid-major, then models in canonical order
std::vector<sweep_row> sweep(const sweep_spec& spec, const summation_policy& policy);

} // namespace casimir
