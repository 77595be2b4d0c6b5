/*
 * Thermal Casimir free energy and pressure between ideal-conductor plates,
 * with tabulated gold-surface corrections.
 *
 * All functions are thread-safe. Lengths are meters, temperatures kelvin,
 * energies J/m^2, pressures Pa; negative values mean attraction. Functions
 * that can fail return a casimir_status and write results through out
 * pointers, which are left untouched on failure; casimir_last_error() gives
 * the detailed message for the most recent failure on the calling thread.
 */

#ifndef CASIMIR_CASIMIR_H
#define CASIMIR_CASIMIR_H

#include <stddef.h>

#if defined(_WIN32)
#define CASIMIR_API __declspec(dllexport)
#else
#define CASIMIR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum casimir_status {
    CASIMIR_STATUS_OK = 0,
    CASIMIR_STATUS_INVALID = 1,     /* malformed input or bad arguments */
    CASIMIR_STATUS_DOMAIN = 2,      /* outside an operation's mathematical domain */
    CASIMIR_STATUS_RANGE = 3,       /* outside tabulated data; no extrapolation */
    CASIMIR_STATUS_CONVERGENCE = 4  /* iteration or solver budget exhausted */
} casimir_status;

typedef enum casimir_model {
    CASIMIR_MODEL_EXACT = 0,          /* Matsubara sum, certified truncation bound */
    CASIMIR_MODEL_LOW_T = 1,          /* low-temperature / small-distance expansion */
    CASIMIR_MODEL_HIGH_T = 2,         /* high-temperature / large-distance expansion */
    CASIMIR_MODEL_CASIMIR_ZERO_T = 3, /* zero-temperature ideal-conductor term */
    CASIMIR_MODEL_GOLD_CORRECTED = 4  /* zero-T term scaled by the gold factor */
} casimir_model;

typedef enum casimir_regime {
    CASIMIR_REGIME_LOW_T_VALID = 0,  /* tau <= 0.5 */
    CASIMIR_REGIME_CROSSOVER = 1,    /* 0.5 < tau < 2 */
    CASIMIR_REGIME_HIGH_T_VALID = 2  /* tau >= 2 */
} casimir_regime;

/* Stable serialization names ("exact", "low_t_valid", ...). */
CASIMIR_API const char* casimir_model_name(casimir_model model);
CASIMIR_API const char* casimir_regime_name(casimir_regime regime);

/* Generic one-line description of a status class. */
CASIMIR_API const char* casimir_status_message(casimir_status status);

/* Detailed message for the calling thread's most recent failure ("" if none). */
CASIMIR_API const char* casimir_last_error(void);

/* --- constants (SI exact / CODATA 2018) ------------------------------- */

CASIMIR_API double casimir_constant_boltzmann(void);   /* J/K */
CASIMIR_API double casimir_constant_hbar(void);        /* J s */
CASIMIR_API double casimir_constant_light_speed(void); /* m/s */
CASIMIR_API double casimir_constant_hbar_c(void);      /* J m */
CASIMIR_API double casimir_constant_zeta3(void);

/* --- calculator handle -------------------------------------------------
 * Holds the summation controls for the exact model. NULL is accepted
 * everywhere a calculator is taken and means the default policy:
 * relative tolerance 1e-12, at most 1e6 Matsubara terms, tau floor 1e-3. */

typedef struct casimir_calculator casimir_calculator;

CASIMIR_API casimir_calculator* casimir_calculator_create(void);
CASIMIR_API void casimir_calculator_destroy(casimir_calculator* calc);

CASIMIR_API casimir_status casimir_calculator_set_relative_tolerance(
    casimir_calculator* calc, double relative_tolerance);
CASIMIR_API casimir_status casimir_calculator_set_max_terms(
    casimir_calculator* calc, long max_matsubara_terms);
CASIMIR_API casimir_status casimir_calculator_set_tau_floor(
    casimir_calculator* calc, double tau_floor);

/* --- point evaluations -------------------------------------------------- */

/* A value with a certified upper bound on |value - true value| for the
 * model's own expression (0 for the closed-form models). */
typedef struct casimir_value {
    double value;
    double truncation_error;
} casimir_value;

CASIMIR_API casimir_status casimir_free_energy(const casimir_calculator* calc,
                                               casimir_model model, double separation_m,
                                               double temperature_k, casimir_value* out);

CASIMIR_API casimir_status casimir_pressure(const casimir_calculator* calc,
                                            casimir_model model, double separation_m,
                                            double temperature_k, casimir_value* out);

/* Regime parameter tau = 2 k T l / (hbar c); exactly 0 at T = 0. */
CASIMIR_API casimir_status casimir_tau(double separation_m, double temperature_k,
                                       double* out);

CASIMIR_API casimir_status casimir_classify_regime(double separation_m,
                                                   double temperature_k, double* tau_value,
                                                   casimir_regime* label);

/* The four low-temperature expansion terms (their sum is the low_t energy
 * up to the certified remainder) and each higher term's ratio to the first. */
typedef struct casimir_term_breakdown {
    double casimir_term_j_per_m2;
    double pair_term_j_per_m2;
    double blackbody_term_j_per_m2;
    double exponential_term_j_per_m2;
    double ratio_2_to_1;
    double ratio_3_to_1;
    double ratio_4_to_1;
} casimir_term_breakdown;

CASIMIR_API casimir_status casimir_low_t_terms(double separation_m, double temperature_k,
                                               casimir_term_breakdown* out);

/* --- gold-surface correction table -------------------------------------- */

typedef struct casimir_table_row {
    double separation_nm;
    double separation_m;
    double factor_zero_t; /* T = 0 column */
    double factor_room_t; /* T = 300 K column */
} casimir_table_row;

CASIMIR_API size_t casimir_gold_table_size(void);
CASIMIR_API casimir_status casimir_gold_table_row(size_t index, casimir_table_row* out);

/* Bilinear interpolation; l in [300 nm, 800 nm] and T in [0, 300] K only
 * (CASIMIR_STATUS_RANGE otherwise); exact at grid nodes. */
CASIMIR_API casimir_status casimir_gold_correction_factor(double separation_m,
                                                          double temperature_k,
                                                          double* out);

/* --- model comparison and crossover -------------------------------------- */

typedef struct casimir_comparison {
    double separation_m;
    double temperature_k;
    double tau;
    double exact_j_per_m2;
    double low_t_j_per_m2;
    double high_t_j_per_m2;
    double casimir_j_per_m2;
    double rel_dev_low_t;   /* |low_t - exact| / |exact| */
    double rel_dev_high_t;
    double rel_dev_casimir;
} casimir_comparison;

/* Requires T > 0 and tau at or above the calculator's tau floor. */
CASIMIR_API casimir_status casimir_compare_models(const casimir_calculator* calc,
                                                  double separation_m, double temperature_k,
                                                  casimir_comparison* out);

/* Separation at which the two expansions deviate equally from the exact sum,
 * by bisection on ln(l) over tau in [0.3, 3]; requires T > 0. */
CASIMIR_API casimir_status casimir_crossover_separation(const casimir_calculator* calc,
                                                        double temperature_k, double* out);

/* --- separation sweeps ---------------------------------------------------
 * A sweep walks a separation grid at fixed temperature and yields one row
 * per (grid point, model), grid-major, models in declaration order of
 * casimir_model. Grid endpoints are reproduced exactly as given. */

typedef struct casimir_sweep_spec {
    double l_start_m;       /* > 0 */
    double l_stop_m;        /* > l_start_m */
    long steps;             /* >= 2 */
    int log_scale;          /* 0 = linear spacing, 1 = geometric */
    double temperature_k;   /* >= 0 */
    unsigned model_mask;    /* bitwise OR of (1u << casimir_model); 0 = exact only */
    int include_correction; /* also look up the gold factor per row */
} casimir_sweep_spec;

typedef struct casimir_sweep_row {
    long grid_index;
    double separation_m;
    double temperature_k;
    double tau;
    casimir_model model;
    casimir_status status; /* this row's evaluation outcome */
    char error_message[256];
    double energy_j_per_m2;
    double energy_truncation_error;
    double pressure_pa;
    double pressure_truncation_error;
    int has_correction; /* 0: factor unavailable (outside table or not requested) */
    double correction_factor;
} casimir_sweep_row;

typedef struct casimir_sweep casimir_sweep;

CASIMIR_API casimir_status casimir_sweep_create(const casimir_calculator* calc,
                                                const casimir_sweep_spec* spec,
                                                casimir_sweep** out);

/* Writes the next row and returns 1, or returns 0 at the end of the grid.
 * A row whose status is not OK reports a failed model evaluation; the sweep
 * itself continues. */
CASIMIR_API int casimir_sweep_next(casimir_sweep* sweep, casimir_sweep_row* out);

CASIMIR_API void casimir_sweep_destroy(casimir_sweep* sweep);

/* --- unit-aware quantities ----------------------------------------------
 * Text form is "<number><suffix>" with suffix from {m, um, µm, nm, K} or
 * empty. Length conversion is decimal-exact: "300nm" parses to a double
 * bitwise-equal to the literal 300e-9. */

typedef enum casimir_unit_kind {
    CASIMIR_UNIT_NONE = 0,
    CASIMIR_UNIT_LENGTH = 1,
    CASIMIR_UNIT_TEMPERATURE = 2
} casimir_unit_kind;

typedef struct casimir_quantity {
    double magnitude;
    char unit[8]; /* suffix exactly as given, NUL-terminated ("" if none) */
    casimir_unit_kind kind;
    double value_si; /* meters / kelvin / bare magnitude */
} casimir_quantity;

CASIMIR_API casimir_status casimir_parse_quantity(const char* text, casimir_quantity* out);

/* Formats magnitude + suffix so that parsing the result reproduces the
 * quantity bitwise. Fails with CASIMIR_STATUS_INVALID if the buffer is too
 * small (32 bytes always suffice). */
CASIMIR_API casimir_status casimir_format_quantity(const casimir_quantity* quantity,
                                                   char* buffer, size_t size);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CASIMIR_CASIMIR_H */
