#include "analysis.hpp"

#include <algorithm>
#include <cmath>

#include "asymptotics.hpp"
#include "constants.hpp"
#include "exact.hpp"
#include "gold.hpp"
#include "units.hpp"

namespace casimir {

namespace {
using pc = physical_constants;
}

const char* regime_label_name(regime_label label) {
    switch (label) {
        case regime_label::low_t_valid: return "low_t_valid";
        case regime_label::crossover: return "crossover";
        case regime_label::high_t_valid: return "high_t_valid";
    }
    return "unknown";
}

regime_class classify_regime(const query_point& p) {
    validate_point(p);
    const double t = tau(p);
    regime_label label = regime_label::crossover;
    if (t <= 0.5)
        label = regime_label::low_t_valid;
    else if (t >= 2.0)
        label = regime_label::high_t_valid;
    return {t, label};
}

model_comparison compare_models(const query_point& p, const summation_policy& policy) {
    validate_point(p);
    if (p.temperature == 0.0)
        throw invalid_input_error(
            "model comparison requires T > 0; the high-temperature expansion "
            "degenerates at T = 0");

    model_comparison c{};
    c.point = p;
    c.tau_value = tau(p);
    c.exact = exact_energy(p, policy).value;
    c.low_t = low_t_energy(p).value;
    c.high_t = high_t_energy(p).value;
    c.casimir = casimir_energy(p.separation);

    const double denom = std::fabs(c.exact);
    c.rel_dev_low_t = std::fabs(c.low_t - c.exact) / denom;
    c.rel_dev_high_t = std::fabs(c.high_t - c.exact) / denom;
    c.rel_dev_casimir = std::fabs(c.casimir - c.exact) / denom;
    return c;
}

double crossover_separation(double temperature, const summation_policy& policy) {
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw invalid_input_error("crossover search requires a finite temperature > 0");
    validate_policy(policy);

    // dev_low - dev_high: negative where the low-T series wins, positive
    // where the high-T one does
    auto deviation_gap = [&](double l) {
        const query_point p{l, temperature};
        const double exact = exact_energy(p, policy).value;
        const double denom = std::fabs(exact);
        return std::fabs(low_t_energy(p).value - exact) / denom -
               std::fabs(high_t_energy(p).value - exact) / denom;
    };

    const double l_unit = pc::hbar_c / (2.0 * pc::boltzmann * temperature);  // tau = 1
    double a = std::log(0.3 * l_unit);
    double b = std::log(3.0 * l_unit);
    const double fa = deviation_gap(std::exp(a));
    const double fb = deviation_gap(std::exp(b));
    if (!(fa < 0.0 && fb > 0.0))
        throw convergence_error("no sign change across the crossover bracket tau in [0.3, 3]");

    for (int iter = 0; iter < 200 && (b - a) > 1e-15; ++iter) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // log-interval exhausted
        if (deviation_gap(std::exp(mid)) < 0.0)
            a = mid;
        else
            b = mid;
    }
    return std::exp(0.5 * (a + b));
}

void validate_spec(const sweep_spec& spec) {
    if (!std::isfinite(spec.l_start) || !std::isfinite(spec.l_stop) || spec.l_start <= 0.0)
        throw invalid_input_error("sweep separations must be finite and positive");
    if (!(spec.l_start < spec.l_stop))
        throw invalid_input_error("sweep requires l_start < l_stop");
    if (spec.l_steps < 2) throw invalid_input_error("sweep requires at least 2 steps");
    if (!std::isfinite(spec.temperature) || spec.temperature < 0.0)
        throw invalid_input_error("sweep temperature must be finite and non-negative");
}

double sweep_separation(const sweep_spec& spec, long i) {
    if (i <= 0) return spec.l_start;
    if (i >= spec.l_steps - 1) return spec.l_stop;
    const double t = static_cast<double>(i) / static_cast<double>(spec.l_steps - 1);
    if (spec.scale == sweep_scale::linear) return std::lerp(spec.l_start, spec.l_stop, t);
    return std::exp(std::lerp(std::log(spec.l_start), std::log(spec.l_stop), t));
}

std::vector<model_tag> sweep_models(const sweep_spec& spec) {
    static constexpr model_tag canonical[] = {model_tag::exact, model_tag::low_t,
                                              model_tag::high_t, model_tag::casimir_zero_t,
                                              model_tag::gold_corrected};
    if (spec.models.empty()) return {model_tag::exact};
    std::vector<model_tag> out;
    for (model_tag m : canonical)
        if (std::find(spec.models.begin(), spec.models.end(), m) != spec.models.end())
            out.push_back(m);
    return out;
}

sweep_row evaluate_sweep_row(const sweep_spec& spec, const summation_policy& policy,
                             long grid_index, model_tag model) {
    sweep_row row;
    row.grid_index = grid_index;
    row.separation = sweep_separation(spec, grid_index);
    row.temperature = spec.temperature;
    row.model = model;
    const query_point p{row.separation, row.temperature};
    row.tau_value = tau(p);

    try {
        switch (model) {
            case model_tag::exact: {
                const auto e = exact_energy(p, policy);
                const auto pr = exact_pressure(p, policy);
                row.energy = e.value;
                row.energy_truncation_error = e.truncation_error;
                row.pressure = pr.value;
                row.pressure_truncation_error = pr.truncation_error;
                break;
            }
            case model_tag::low_t: {
                const auto e = low_t_energy(p);
                const auto pr = low_t_pressure(p);
                row.energy = e.value;
                row.energy_truncation_error = e.truncation_error;
                row.pressure = pr.value;
                row.pressure_truncation_error = pr.truncation_error;
                break;
            }
            case model_tag::high_t: {
                const auto e = high_t_energy(p);
                const auto pr = high_t_pressure(p);
                row.energy = e.value;
                row.energy_truncation_error = e.truncation_error;
                row.pressure = pr.value;
                row.pressure_truncation_error = pr.truncation_error;
                break;
            }
            case model_tag::casimir_zero_t: {
                row.energy = casimir_energy(row.separation);
                row.pressure = casimir_pressure(row.separation);
                break;
            }
            case model_tag::gold_corrected: {
                const auto e = gold_corrected_energy(p);
                row.energy = e.value;
                row.pressure = gold_corrected_pressure(p).value;
                row.correction_factor = gold_correction_factor(p);
                row.has_correction = true;
                break;
            }
        }
    } catch (const error& e) {
        row.status = e.code;
        row.error = e.what();
        return row;
    }

    if (spec.include_correction && !row.has_correction) {
        try {
            row.correction_factor = gold_correction_factor(p);
            row.has_correction = true;
        } catch (const range_error&) {
            // outside the tabulated window: leave the cell empty, keep the row
        }
    }
    return row;
}

std::vector<sweep_row> sweep(const sweep_spec& spec, const summation_policy& policy) {
    validate_spec(spec);
    validate_policy(policy);
    const auto models = sweep_models(spec);
    std::vector<sweep_row> rows;
    rows.reserve(static_cast<std::size_t>(spec.l_steps) * models.size());
    for (long i = 0; i < spec.l_steps; ++i)
        for (model_tag m : models) rows.push_back(evaluate_sweep_row(spec, policy, i, m));
    return rows;
}

} // namespace casimir
