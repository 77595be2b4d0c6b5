// casimir — command-line calculator for thermal Casimir free energy and
// pressure between ideal-conductor plates, with gold-surface corrections.
//
// Links only the public C API. Outputs CSV (default) or JSON; every real is
// serialized with 17 significant digits so output files are bitwise stable
// and round-trip losslessly to double.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casimir/casimir.h"

namespace {

struct cli_failure {
    int code;
    std::string message;
};

int exit_for(casimir_status status) {
    switch (status) {
        case CASIMIR_STATUS_OK: return 0;
        case CASIMIR_STATUS_INVALID:
        case CASIMIR_STATUS_DOMAIN: return 2;
        case CASIMIR_STATUS_RANGE: return 3;
        case CASIMIR_STATUS_CONVERGENCE: return 4;
    }
    return 2;
}

void require_ok(casimir_status status) {
    if (status != CASIMIR_STATUS_OK) throw cli_failure{exit_for(status), casimir_last_error()};
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_length_arg(const std::string& text, const std::string& what) {
    casimir_quantity q;
    require_ok(casimir_parse_quantity(text.c_str(), &q));
    if (q.kind == CASIMIR_UNIT_TEMPERATURE)
        throw cli_failure{2, what + " must be a length, got temperature '" + text + "'"};
    return q.value_si;  // bare numbers are meters
}

double parse_temperature_arg(const std::string& text, const std::string& what) {
    casimir_quantity q;
    require_ok(casimir_parse_quantity(text.c_str(), &q));
    if (q.kind == CASIMIR_UNIT_LENGTH)
        throw cli_failure{2, what + " must be a temperature, got length '" + text + "'"};
    return q.value_si;  // bare numbers are kelvin
}

casimir_model model_from_flag(const std::string& name) {
    if (name == "exact") return CASIMIR_MODEL_EXACT;
    if (name == "low-t") return CASIMIR_MODEL_LOW_T;
    if (name == "high-t") return CASIMIR_MODEL_HIGH_T;
    if (name == "casimir") return CASIMIR_MODEL_CASIMIR_ZERO_T;
    if (name == "gold") return CASIMIR_MODEL_GOLD_CORRECTED;
    throw cli_failure{2, "unknown model '" + name + "'"};
}

// calculator configured by the optional policy flags; nullptr = defaults
struct calculator_handle {
    casimir_calculator* calc = nullptr;
    ~calculator_handle() { casimir_calculator_destroy(calc); }

    void configure(const std::optional<double>& rel_tol, const std::optional<long>& max_terms) {
        if (!rel_tol && !max_terms) return;
        calc = casimir_calculator_create();
        if (!calc) throw cli_failure{2, "calculator allocation failed"};
        if (rel_tol) require_ok(casimir_calculator_set_relative_tolerance(calc, *rel_tol));
        if (max_terms) require_ok(casimir_calculator_set_max_terms(calc, *max_terms));
    }
};

// --- serialization -------------------------------------------------------
// CSV: fixed header, one line per record. JSON: array of objects with keys
// identical to the CSV header; a field that would be an empty CSV cell is
// simply absent from the object.

enum class output_format { csv, json };

struct field {
    const char* key;
    enum class kind { number, text, empty } k;
    double number = 0.0;
    std::string text;
};

field num_field(const char* key, double v) { return {key, field::kind::number, v, {}}; }
field text_field(const char* key, std::string v) {
    return {key, field::kind::text, 0.0, std::move(v)};
}
field empty_field(const char* key) { return {key, field::kind::empty, 0.0, {}}; }

void print_csv_header(const std::vector<field>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i)
        std::cout << (i ? "," : "") << fields[i].key;
    std::cout << "\n";
}

void print_csv_row(const std::vector<field>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) std::cout << ",";
        switch (fields[i].k) {
            case field::kind::number: std::cout << fmt17(fields[i].number); break;
            case field::kind::text: std::cout << fields[i].text; break;
            case field::kind::empty: break;
        }
    }
    std::cout << "\n";
}

std::string json_object(const std::vector<field>& fields) {
    std::string out = "{";
    bool first = true;
    for (const auto& f : fields) {
        if (f.k == field::kind::empty) continue;
        if (!first) out += ",";
        first = false;
        out += "\"";
        out += f.key;
        out += "\":";
        if (f.k == field::kind::number)
            out += fmt17(f.number);
        else
            out += "\"" + f.text + "\"";
    }
    out += "}";
    return out;
}

// emits a whole result set in the selected format
void print_records(output_format format, const std::vector<std::vector<field>>& records) {
    if (format == output_format::csv) {
        if (!records.empty()) print_csv_header(records.front());
        for (const auto& r : records) print_csv_row(r);
        return;
    }
    std::cout << "[";
    for (std::size_t i = 0; i < records.size(); ++i)
        std::cout << (i ? ",\n" : "\n") << json_object(records[i]);
    std::cout << "\n]\n";
}

std::vector<field> output_record_fields(double separation, double temperature, double tau,
                                        const char* model, double energy, double pressure,
                                        bool has_correction, double correction,
                                        double truncation) {
    std::vector<field> f;
    f.push_back(num_field("separation_m", separation));
    f.push_back(num_field("temperature_K", temperature));
    f.push_back(num_field("tau", tau));
    f.push_back(text_field("model", model));
    f.push_back(num_field("energy_J_per_m2", energy));
    f.push_back(num_field("pressure_Pa", pressure));
    f.push_back(has_correction ? num_field("correction_factor", correction)
                               : empty_field("correction_factor"));
    f.push_back(num_field("truncation_error", truncation));
    return f;
}

// --- subcommands ----------------------------------------------------------

// shared flag values, filled by CLI11
struct options {
    std::string separation;
    std::string temperature;
    std::string model = "exact";
    std::string format = "csv";
    std::string scale = "linear";
    std::string l_start, l_stop;
    long steps = 0;
    std::vector<std::string> sweep_models;
    bool with_correction = false;
    std::optional<double> rel_tol;
    std::optional<long> max_terms;
};

output_format format_of(const options& opt) {
    return opt.format == "json" ? output_format::json : output_format::csv;
}

// energy/pressure: one full record; truncation_error reports the bound for
// the subcommand's primary quantity
int run_point_value(const options& opt, bool pressure_primary) {
    const double l = parse_length_arg(opt.separation, "--separation");
    const double T = parse_temperature_arg(opt.temperature, "--temperature");
    const casimir_model model = model_from_flag(opt.model);

    calculator_handle handle;
    handle.configure(opt.rel_tol, opt.max_terms);

    double tau = 0.0;
    require_ok(casimir_tau(l, T, &tau));
    casimir_value energy{}, pressure{};
    require_ok(casimir_free_energy(handle.calc, model, l, T, &energy));
    require_ok(casimir_pressure(handle.calc, model, l, T, &pressure));

    bool has_correction = false;
    double correction = 0.0;
    if (model == CASIMIR_MODEL_GOLD_CORRECTED) {
        require_ok(casimir_gold_correction_factor(l, T, &correction));
        has_correction = true;
    }

    const double truncation =
        pressure_primary ? pressure.truncation_error : energy.truncation_error;
    print_records(format_of(opt),
                  {output_record_fields(l, T, tau, casimir_model_name(model), energy.value,
                                        pressure.value, has_correction, correction,
                                        truncation)});
    return 0;
}

int run_regime(const options& opt) {
    const double l = parse_length_arg(opt.separation, "--separation");
    const double T = parse_temperature_arg(opt.temperature, "--temperature");
    double tau = 0.0;
    casimir_regime label = CASIMIR_REGIME_LOW_T_VALID;
    require_ok(casimir_classify_regime(l, T, &tau, &label));
    print_records(format_of(opt), {{
                      num_field("separation_m", l),
                      num_field("temperature_K", T),
                      num_field("tau_value", tau),
                      text_field("label", casimir_regime_name(label)),
                  }});
    return 0;
}

int run_terms(const options& opt) {
    const double l = parse_length_arg(opt.separation, "--separation");
    const double T = parse_temperature_arg(opt.temperature, "--temperature");
    casimir_term_breakdown terms{};
    require_ok(casimir_low_t_terms(l, T, &terms));
    print_records(format_of(opt), {{
                      num_field("separation_m", l),
                      num_field("temperature_K", T),
                      num_field("casimir_term_J_per_m2", terms.casimir_term_j_per_m2),
                      num_field("pair_term_J_per_m2", terms.pair_term_j_per_m2),
                      num_field("blackbody_term_J_per_m2", terms.blackbody_term_j_per_m2),
                      num_field("exponential_term_J_per_m2", terms.exponential_term_j_per_m2),
                      num_field("ratio_2_to_1", terms.ratio_2_to_1),
                      num_field("ratio_3_to_1", terms.ratio_3_to_1),
                      num_field("ratio_4_to_1", terms.ratio_4_to_1),
                  }});
    return 0;
}

int run_correction(const options& opt) {
    const double l = parse_length_arg(opt.separation, "--separation");
    const double T = parse_temperature_arg(opt.temperature, "--temperature");
    double factor = 0.0;
    require_ok(casimir_gold_correction_factor(l, T, &factor));
    print_records(format_of(opt), {{
                      num_field("separation_m", l),
                      num_field("temperature_K", T),
                      num_field("correction_factor", factor),
                  }});
    return 0;
}

int run_compare(const options& opt) {
    const double l = parse_length_arg(opt.separation, "--separation");
    const double T = parse_temperature_arg(opt.temperature, "--temperature");
    calculator_handle handle;
    handle.configure(opt.rel_tol, opt.max_terms);
    casimir_comparison c{};
    require_ok(casimir_compare_models(handle.calc, l, T, &c));
    print_records(format_of(opt), {{
                      num_field("separation_m", c.separation_m),
                      num_field("temperature_K", c.temperature_k),
                      num_field("tau", c.tau),
                      num_field("exact_J_per_m2", c.exact_j_per_m2),
                      num_field("low_t_J_per_m2", c.low_t_j_per_m2),
                      num_field("high_t_J_per_m2", c.high_t_j_per_m2),
                      num_field("casimir_J_per_m2", c.casimir_j_per_m2),
                      num_field("rel_dev_low_t", c.rel_dev_low_t),
                      num_field("rel_dev_high_t", c.rel_dev_high_t),
                      num_field("rel_dev_casimir", c.rel_dev_casimir),
                  }});
    return 0;
}

int run_sweep(const options& opt) {
    casimir_sweep_spec spec{};
    spec.l_start_m = parse_length_arg(opt.l_start, "--l-start");
    spec.l_stop_m = parse_length_arg(opt.l_stop, "--l-stop");
    spec.steps = opt.steps;
    spec.log_scale = (opt.scale == "log") ? 1 : 0;
    spec.temperature_k = parse_temperature_arg(opt.temperature, "--temperature");
    spec.model_mask = 0;
    for (const auto& name : opt.sweep_models)
        spec.model_mask |= 1u << model_from_flag(name);
    spec.include_correction = opt.with_correction ? 1 : 0;

    calculator_handle handle;
    handle.configure(opt.rel_tol, opt.max_terms);

    casimir_sweep* sweep = nullptr;
    require_ok(casimir_sweep_create(handle.calc, &spec, &sweep));

    // stream rows; a failed model evaluation is reported on stderr and its
    // row dropped, without aborting the rest of the grid
    const output_format format = format_of(opt);
    int exit_code = 0;
    bool first = true;
    casimir_sweep_row row;
    if (format == output_format::json) std::cout << "[";
    while (casimir_sweep_next(sweep, &row)) {
        if (row.status != CASIMIR_STATUS_OK) {
            std::cerr << "error: " << row.error_message << " (separation "
                      << fmt17(row.separation_m) << " m, model "
                      << casimir_model_name(row.model) << ")\n";
            if (exit_code == 0) exit_code = exit_for(row.status);
            continue;
        }
        const auto fields = output_record_fields(
            row.separation_m, row.temperature_k, row.tau, casimir_model_name(row.model),
            row.energy_j_per_m2, row.pressure_pa, row.has_correction != 0,
            row.correction_factor, row.energy_truncation_error);
        if (format == output_format::csv) {
            if (first) print_csv_header(fields);
            print_csv_row(fields);
        } else {
            std::cout << (first ? "\n" : ",\n") << json_object(fields);
        }
        first = false;
    }
    if (format == output_format::json) std::cout << "\n]\n";
    casimir_sweep_destroy(sweep);
    return exit_code;
}

void add_format_flag(CLI::App* cmd, options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void add_point_flags(CLI::App* cmd, options& opt) {
    cmd->add_option("--separation", opt.separation,
                    "Plate separation, e.g. 300nm, 0.8um, 2e-6m")
        ->required();
    cmd->add_option("--temperature", opt.temperature, "Temperature, e.g. 300K")->required();
    add_format_flag(cmd, opt);
}

void add_policy_flags(CLI::App* cmd, options& opt) {
    cmd->add_option("--rel-tol", opt.rel_tol,
                    "Relative tolerance of the Matsubara summation");
    cmd->add_option("--max-terms", opt.max_terms, "Matsubara term budget");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal Casimir free energy and pressure between ideal-conductor "
                 "plates, with tabulated gold-surface corrections"};
    app.require_subcommand(1);
    options opt;

    auto* energy = app.add_subcommand("energy", "Free energy per unit area at one point");
    add_point_flags(energy, opt);
    add_policy_flags(energy, opt);
    energy->add_option("--model", opt.model, "Evaluation model")
        ->check(CLI::IsMember({"exact", "low-t", "high-t", "casimir", "gold"}))
        ->capture_default_str();

    auto* pressure = app.add_subcommand("pressure", "Pressure at one point");
    add_point_flags(pressure, opt);
    add_policy_flags(pressure, opt);
    pressure->add_option("--model", opt.model, "Evaluation model")
        ->check(CLI::IsMember({"exact", "low-t", "high-t", "casimir", "gold"}))
        ->capture_default_str();

    auto* regime = app.add_subcommand("regime", "Thermal regime parameter and label");
    add_point_flags(regime, opt);

    auto* terms = app.add_subcommand("terms", "Low-temperature expansion term breakdown");
    add_point_flags(terms, opt);

    auto* correction =
        app.add_subcommand("correction", "Gold-surface correction factor from the table");
    add_point_flags(correction, opt);

    auto* compare = app.add_subcommand("compare", "All models against the exact sum");
    add_point_flags(compare, opt);
    add_policy_flags(compare, opt);

    auto* sweep = app.add_subcommand("sweep", "Stream records over a separation grid");
    sweep->add_option("--l-start", opt.l_start, "First separation")->required();
    sweep->add_option("--l-stop", opt.l_stop, "Last separation")->required();
    sweep->add_option("--steps", opt.steps, "Number of grid points (>= 2)")->required();
    sweep->add_option("--scale", opt.scale, "Grid spacing")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    sweep->add_option("--temperature", opt.temperature, "Temperature, e.g. 300K")->required();
    sweep->add_option("--models", opt.sweep_models,
                      "Models to evaluate (comma-separated subset of "
                      "exact,low-t,high-t,casimir,gold)")
        ->delimiter(',');
    sweep->add_flag("--with-correction", opt.with_correction,
                    "Include the gold correction factor per row");
    add_format_flag(sweep, opt);
    add_policy_flags(sweep, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (energy->parsed()) return run_point_value(opt, false);
        if (pressure->parsed()) return run_point_value(opt, true);
        if (regime->parsed()) return run_regime(opt);
        if (terms->parsed()) return run_terms(opt);
        if (correction->parsed()) return run_correction(opt);
        if (compare->parsed()) return run_compare(opt);
        if (sweep->parsed()) return run_sweep(opt);
    } catch (const cli_failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return 2;
}
