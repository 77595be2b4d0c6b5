#include "casimir/casimir.h"

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "asymptotics.hpp"
#include "constants.hpp"
#include "exact.hpp"
#include "gold.hpp"
#include "polylog.hpp"
#include "types.hpp"
#include "units.hpp"

// the C enums are defined to mirror the core enums value-for-value
static_assert(CASIMIR_STATUS_OK == static_cast<int>(casimir::status_code::ok));
static_assert(CASIMIR_STATUS_INVALID == static_cast<int>(casimir::status_code::invalid));
static_assert(CASIMIR_STATUS_DOMAIN == static_cast<int>(casimir::status_code::domain));
static_assert(CASIMIR_STATUS_RANGE == static_cast<int>(casimir::status_code::range));
static_assert(CASIMIR_STATUS_CONVERGENCE ==
              static_cast<int>(casimir::status_code::convergence));
static_assert(CASIMIR_MODEL_EXACT == static_cast<int>(casimir::model_tag::exact));
static_assert(CASIMIR_MODEL_LOW_T == static_cast<int>(casimir::model_tag::low_t));
static_assert(CASIMIR_MODEL_HIGH_T == static_cast<int>(casimir::model_tag::high_t));
static_assert(CASIMIR_MODEL_CASIMIR_ZERO_T ==
              static_cast<int>(casimir::model_tag::casimir_zero_t));
static_assert(CASIMIR_MODEL_GOLD_CORRECTED ==
              static_cast<int>(casimir::model_tag::gold_corrected));

struct casimir_calculator {
    casimir::summation_policy policy;
};

struct casimir_sweep {
    casimir::sweep_spec spec;
    casimir::summation_policy policy;
    std::vector<casimir::model_tag> models;
    long grid_index = 0;
    std::size_t model_index = 0;
};

namespace {

thread_local std::string g_last_error;

casimir_status fail(casimir_status status, const char* message) {
    g_last_error = message;
    return status;
}

// runs f, translating core exceptions into status codes + last-error text
template <typename F>
casimir_status guarded(F&& f) {
    try {
        f();
        return CASIMIR_STATUS_OK;
    } catch (const casimir::error& e) {
        g_last_error = e.what();
        return static_cast<casimir_status>(static_cast<int>(e.code));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CASIMIR_STATUS_INVALID;
    }
}

casimir::summation_policy policy_of(const casimir_calculator* calc) {
    return calc ? calc->policy : casimir::summation_policy{};
}

bool valid_model(casimir_model model) {
    return model >= CASIMIR_MODEL_EXACT && model <= CASIMIR_MODEL_GOLD_CORRECTED;
}

casimir::energy_result energy_for(casimir::model_tag model, const casimir::query_point& p,
                                  const casimir::summation_policy& policy) {
    casimir::validate_point(p);
    switch (model) {
        case casimir::model_tag::exact: return casimir::exact_energy(p, policy);
        case casimir::model_tag::low_t: return casimir::low_t_energy(p);
        case casimir::model_tag::high_t: return casimir::high_t_energy(p);
        case casimir::model_tag::casimir_zero_t:
            return casimir::casimir_energy_result(p.separation);
        case casimir::model_tag::gold_corrected: return casimir::gold_corrected_energy(p);
    }
    throw casimir::invalid_input_error("unknown model tag");
}

casimir::pressure_result pressure_for(casimir::model_tag model,
                                      const casimir::query_point& p,
                                      const casimir::summation_policy& policy) {
    casimir::validate_point(p);
    switch (model) {
        case casimir::model_tag::exact: return casimir::exact_pressure(p, policy);
        case casimir::model_tag::low_t: return casimir::low_t_pressure(p);
        case casimir::model_tag::high_t: return casimir::high_t_pressure(p);
        case casimir::model_tag::casimir_zero_t:
            return casimir::casimir_pressure_result(p.separation);
        case casimir::model_tag::gold_corrected: return casimir::gold_corrected_pressure(p);
    }
    throw casimir::invalid_input_error("unknown model tag");
}

} // namespace

extern "C" {

const char* casimir_model_name(casimir_model model) {
    if (!valid_model(model)) return "unknown";
    return casimir::model_name(static_cast<casimir::model_tag>(model));
}

const char* casimir_regime_name(casimir_regime regime) {
    switch (regime) {
        case CASIMIR_REGIME_LOW_T_VALID:
        case CASIMIR_REGIME_CROSSOVER:
        case CASIMIR_REGIME_HIGH_T_VALID:
            return casimir::regime_label_name(static_cast<casimir::regime_label>(regime));
    }
    return "unknown";
}

const char* casimir_status_message(casimir_status status) {
    switch (status) {
        case CASIMIR_STATUS_OK: return "ok";
        case CASIMIR_STATUS_INVALID: return "invalid input";
        case CASIMIR_STATUS_DOMAIN: return "outside the operation's domain";
        case CASIMIR_STATUS_RANGE: return "outside tabulated range";
        case CASIMIR_STATUS_CONVERGENCE: return "failed to converge";
    }
    return "unknown status";
}

const char* casimir_last_error(void) { return g_last_error.c_str(); }

double casimir_constant_boltzmann(void) { return casimir::physical_constants::boltzmann; }
double casimir_constant_hbar(void) { return casimir::physical_constants::hbar; }
double casimir_constant_light_speed(void) {
    return casimir::physical_constants::light_speed;
}
double casimir_constant_hbar_c(void) { return casimir::physical_constants::hbar_c; }
double casimir_constant_zeta3(void) { return casimir::physical_constants::zeta3; }

casimir_calculator* casimir_calculator_create(void) { return new casimir_calculator{}; }

void casimir_calculator_destroy(casimir_calculator* calc) { delete calc; }

casimir_status casimir_calculator_set_relative_tolerance(casimir_calculator* calc,
                                                         double relative_tolerance) {
    if (!calc) return fail(CASIMIR_STATUS_INVALID, "null calculator");
    return guarded([&] {
        casimir::summation_policy candidate = calc->policy;
        candidate.relative_tolerance = relative_tolerance;
        casimir::validate_policy(candidate);
        calc->policy = candidate;
    });
}

casimir_status casimir_calculator_set_max_terms(casimir_calculator* calc,
                                                long max_matsubara_terms) {
    if (!calc) return fail(CASIMIR_STATUS_INVALID, "null calculator");
    return guarded([&] {
        casimir::summation_policy candidate = calc->policy;
        candidate.max_matsubara_terms = max_matsubara_terms;
        casimir::validate_policy(candidate);
        calc->policy = candidate;
    });
}

casimir_status casimir_calculator_set_tau_floor(casimir_calculator* calc, double tau_floor) {
    if (!calc) return fail(CASIMIR_STATUS_INVALID, "null calculator");
    return guarded([&] {
        casimir::summation_policy candidate = calc->policy;
        candidate.tau_floor = tau_floor;
        casimir::validate_policy(candidate);
        calc->policy = candidate;
    });
}

casimir_status casimir_free_energy(const casimir_calculator* calc, casimir_model model,
                                   double separation_m, double temperature_k,
                                   casimir_value* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    if (!valid_model(model)) return fail(CASIMIR_STATUS_INVALID, "unknown model");
    return guarded([&] {
        const auto r = energy_for(static_cast<casimir::model_tag>(model),
                                  {separation_m, temperature_k}, policy_of(calc));
        out->value = r.value;
        out->truncation_error = r.truncation_error;
    });
}

casimir_status casimir_pressure(const casimir_calculator* calc, casimir_model model,
                                double separation_m, double temperature_k,
                                casimir_value* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    if (!valid_model(model)) return fail(CASIMIR_STATUS_INVALID, "unknown model");
    return guarded([&] {
        const auto r = pressure_for(static_cast<casimir::model_tag>(model),
                                    {separation_m, temperature_k}, policy_of(calc));
        out->value = r.value;
        out->truncation_error = r.truncation_error;
    });
}

casimir_status casimir_tau(double separation_m, double temperature_k, double* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    return guarded([&] { *out = casimir::tau({separation_m, temperature_k}); });
}

casimir_status casimir_classify_regime(double separation_m, double temperature_k,
                                       double* tau_value, casimir_regime* label) {
    if (!tau_value || !label) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    return guarded([&] {
        const auto r = casimir::classify_regime({separation_m, temperature_k});
        *tau_value = r.tau_value;
        *label = static_cast<casimir_regime>(static_cast<int>(r.label));
    });
}

casimir_status casimir_low_t_terms(double separation_m, double temperature_k,
                                   casimir_term_breakdown* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    return guarded([&] {
        const casimir::query_point p{separation_m, temperature_k};
        const auto r = casimir::low_t_energy(p);
        out->casimir_term_j_per_m2 = r.terms.casimir_term;
        out->pair_term_j_per_m2 = r.terms.pair_term;
        out->blackbody_term_j_per_m2 = r.terms.blackbody_term;
        out->exponential_term_j_per_m2 = r.terms.exponential_term;
        out->ratio_2_to_1 = r.terms.ratio_2_to_1;
        out->ratio_3_to_1 = r.terms.ratio_3_to_1;
        out->ratio_4_to_1 = r.terms.ratio_4_to_1;
    });
}

size_t casimir_gold_table_size(void) { return casimir::gold_table().size(); }

casimir_status casimir_gold_table_row(size_t index, casimir_table_row* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    const auto& table = casimir::gold_table();
    if (index >= table.size()) return fail(CASIMIR_STATUS_INVALID, "table index out of range");
    const auto& row = table[index];
    out->separation_nm = row.separation_nm;
    out->separation_m = row.separation_m;
    out->factor_zero_t = row.factor_zero_t;
    out->factor_room_t = row.factor_room_t;
    return CASIMIR_STATUS_OK;
}

casimir_status casimir_gold_correction_factor(double separation_m, double temperature_k,
                                              double* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    return guarded(
        [&] { *out = casimir::gold_correction_factor({separation_m, temperature_k}); });
}

casimir_status casimir_compare_models(const casimir_calculator* calc, double separation_m,
                                      double temperature_k, casimir_comparison* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    return guarded([&] {
        const auto c =
            casimir::compare_models({separation_m, temperature_k}, policy_of(calc));
        out->separation_m = c.point.separation;
        out->temperature_k = c.point.temperature;
        out->tau = c.tau_value;
        out->exact_j_per_m2 = c.exact;
        out->low_t_j_per_m2 = c.low_t;
        out->high_t_j_per_m2 = c.high_t;
        out->casimir_j_per_m2 = c.casimir;
        out->rel_dev_low_t = c.rel_dev_low_t;
        out->rel_dev_high_t = c.rel_dev_high_t;
        out->rel_dev_casimir = c.rel_dev_casimir;
    });
}

casimir_status casimir_crossover_separation(const casimir_calculator* calc,
                                            double temperature_k, double* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    return guarded(
        [&] { *out = casimir::crossover_separation(temperature_k, policy_of(calc)); });
}

casimir_status casimir_sweep_create(const casimir_calculator* calc,
                                    const casimir_sweep_spec* spec, casimir_sweep** out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    if (!spec) return fail(CASIMIR_STATUS_INVALID, "null sweep spec");
    return guarded([&] {
        casimir::sweep_spec core;
        core.l_start = spec->l_start_m;
        core.l_stop = spec->l_stop_m;
        core.l_steps = spec->steps;
        core.scale = spec->log_scale ? casimir::sweep_scale::log : casimir::sweep_scale::linear;
        core.temperature = spec->temperature_k;
        core.include_correction = spec->include_correction != 0;
        for (int m = CASIMIR_MODEL_EXACT; m <= CASIMIR_MODEL_GOLD_CORRECTED; ++m)
            if (spec->model_mask & (1u << m))
                core.models.push_back(static_cast<casimir::model_tag>(m));
        casimir::validate_spec(core);
        const auto policy = policy_of(calc);
        casimir::validate_policy(policy);
        *out = new casimir_sweep{core, policy, casimir::sweep_models(core), 0, 0};
    });
}

int casimir_sweep_next(casimir_sweep* sweep, casimir_sweep_row* out) {
    if (!sweep || !out) return 0;
    if (sweep->grid_index >= sweep->spec.l_steps) return 0;

    const auto row = casimir::evaluate_sweep_row(sweep->spec, sweep->policy,
                                                 sweep->grid_index,
                                                 sweep->models[sweep->model_index]);
    if (++sweep->model_index >= sweep->models.size()) {
        sweep->model_index = 0;
        ++sweep->grid_index;
    }

    out->grid_index = row.grid_index;
    out->separation_m = row.separation;
    out->temperature_k = row.temperature;
    out->tau = row.tau_value;
    out->model = static_cast<casimir_model>(static_cast<int>(row.model));
    out->status = static_cast<casimir_status>(static_cast<int>(row.status));
    std::snprintf(out->error_message, sizeof(out->error_message), "%s", row.error.c_str());
    out->energy_j_per_m2 = row.energy;
    out->energy_truncation_error = row.energy_truncation_error;
    out->pressure_pa = row.pressure;
    out->pressure_truncation_error = row.pressure_truncation_error;
    out->has_correction = row.has_correction ? 1 : 0;
    out->correction_factor = row.correction_factor;
    return 1;
}

void casimir_sweep_destroy(casimir_sweep* sweep) { delete sweep; }

casimir_status casimir_parse_quantity(const char* text, casimir_quantity* out) {
    if (!out) return fail(CASIMIR_STATUS_INVALID, "null output pointer");
    if (!text) return fail(CASIMIR_STATUS_INVALID, "null input text");
    return guarded([&] {
        const auto q = casimir::parse_quantity(text);
        out->magnitude = q.magnitude;
        std::snprintf(out->unit, sizeof(out->unit), "%s", q.unit.c_str());
        out->kind = static_cast<casimir_unit_kind>(static_cast<int>(q.kind));
        out->value_si = q.value_si;
    });
}

casimir_status casimir_format_quantity(const casimir_quantity* quantity, char* buffer,
                                       size_t size) {
    if (!quantity || !buffer) return fail(CASIMIR_STATUS_INVALID, "null argument");
    casimir::quantity q;
    q.magnitude = quantity->magnitude;
    q.unit.assign(quantity->unit, strnlen(quantity->unit, sizeof(quantity->unit)));
    const std::string text = casimir::format_quantity(q);
    if (text.size() + 1 > size)
        return fail(CASIMIR_STATUS_INVALID, "buffer too small for formatted quantity");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return CASIMIR_STATUS_OK;
}

} // extern "C"
