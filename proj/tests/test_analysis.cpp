#include <cmath>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "asymptotics.hpp"
#include "doctest.h"
#include "exact.hpp"
#include "gold.hpp"
#include "types.hpp"
#include "units.hpp"

using namespace casimir;

namespace {

const summation_policy default_policy{};
constexpr double l_tau1_300k = 3.816474198679464e-06;

} // namespace

TEST_CASE("regime classification") {
    const auto r800 = classify_regime({800e-9, 300.0});
    CHECK(r800.tau_value == doctest::Approx(0.2096175575552974).epsilon(1e-15));
    CHECK(r800.label == regime_label::low_t_valid);

    const auto r0 = classify_regime({1e-6, 0.0});
    CHECK(r0.tau_value == 0.0);
    CHECK(r0.label == regime_label::low_t_valid);

    const auto r20 = classify_regime({20e-6, 300.0});
    CHECK(r20.tau_value == doctest::Approx(5.240438938882435).epsilon(1e-15));
    CHECK(r20.label == regime_label::high_t_valid);

    CHECK(classify_regime({l_tau1_300k, 300.0}).label == regime_label::crossover);
    CHECK(classify_regime({3e-6, 300.0}).label == regime_label::crossover);

    CHECK(std::string(regime_label_name(regime_label::low_t_valid)) == "low_t_valid");
    CHECK(std::string(regime_label_name(regime_label::crossover)) == "crossover");
    CHECK(std::string(regime_label_name(regime_label::high_t_valid)) == "high_t_valid");
}

TEST_CASE("model comparison at 800 nm, 300 K") {
    const auto c = compare_models({800e-9, 300.0}, default_policy);
    CHECK(c.point.separation == 800e-9);
    CHECK(c.tau_value == tau({800e-9, 300.0}));
    CHECK(c.exact == exact_energy({800e-9, 300.0}, default_policy).value);
    CHECK(c.low_t == low_t_energy({800e-9, 300.0}).value);
    CHECK(c.high_t == high_t_energy({800e-9, 300.0}).value);
    CHECK(c.casimir == casimir_energy(800e-9));

    CHECK(c.rel_dev_low_t < 1e-8);
    // the zero-T formula misses the thermal deepening by about 1.4% here
    CHECK(std::fabs(c.rel_dev_casimir - 0.013940567145348736) < 1e-9);
    CHECK(c.rel_dev_high_t > c.rel_dev_low_t);
    CHECK(c.exact < 0.0);
}

TEST_CASE("model comparison at 20 um, 300 K") {
    const auto c = compare_models({20e-6, 300.0}, default_policy);
    CHECK(c.rel_dev_high_t < 1e-12);
    CHECK(std::fabs(c.rel_dev_casimir - 0.8906183645749159) < 1e-9);
    CHECK(c.rel_dev_low_t > c.rel_dev_high_t);
}

TEST_CASE("model comparison at 300 nm, 300 K") {
    const auto c = compare_models({300e-9, 300.0}, default_policy);
    CHECK(c.rel_dev_low_t < 1e-8);
}

TEST_CASE("model comparison requires a positive temperature") {
    CHECK_THROWS_AS(compare_models({800e-9, 0.0}, default_policy), invalid_input_error);
    // below the summation floor the exact oracle refuses
    CHECK_THROWS_AS(compare_models({300e-9, 0.4}, default_policy), domain_error);
}

TEST_CASE("crossover separation at 300 K") {
    const double l = crossover_separation(300.0, default_policy);
    CHECK(l == doctest::Approx(l_tau1_300k).epsilon(1e-6));

    // both expansions deviate equally there
    const query_point p{l, 300.0};
    const double exact = exact_energy(p, default_policy).value;
    const double dev_low = std::fabs(low_t_energy(p).value - exact) / std::fabs(exact);
    const double dev_high = std::fabs(high_t_energy(p).value - exact) / std::fabs(exact);
    CHECK(std::fabs(dev_low - dev_high) < 1e-10);

    // deviations are ordered on each side
    const auto below = compare_models({0.5 * l, 300.0}, default_policy);
    CHECK(below.rel_dev_low_t < below.rel_dev_high_t);
    const auto above = compare_models({2.0 * l, 300.0}, default_policy);
    CHECK(above.rel_dev_high_t < above.rel_dev_low_t);
}

TEST_CASE("crossover scales inversely with temperature") {
    const double l300 = crossover_separation(300.0, default_policy);
    const double l600 = crossover_separation(600.0, default_policy);
    CHECK(l600 == doctest::Approx(l300 / 2.0).epsilon(1e-6));
}

TEST_CASE("crossover rejects non-positive temperatures") {
    CHECK_THROWS_AS(crossover_separation(0.0, default_policy), invalid_input_error);
    CHECK_THROWS_AS(crossover_separation(-10.0, default_policy), invalid_input_error);
}

TEST_CASE("sweep grids hit their endpoints and nodes exactly") {
    sweep_spec spec;
    spec.l_start = 300e-9;
    spec.l_stop = 800e-9;
    spec.l_steps = 6;
    spec.temperature = 300.0;
    const double nodes[] = {300e-9, 400e-9, 500e-9, 600e-9, 700e-9, 800e-9};
    for (long i = 0; i < 6; ++i) CHECK(sweep_separation(spec, i) == nodes[i]);

    spec.scale = sweep_scale::log;
    spec.l_start = 100e-9;
    spec.l_stop = 10e-6;
    spec.l_steps = 25;
    CHECK(sweep_separation(spec, 0) == 100e-9);
    CHECK(sweep_separation(spec, 24) == 10e-6);
    for (long i = 1; i < 25; ++i)
        CHECK(sweep_separation(spec, i) > sweep_separation(spec, i - 1));
}

TEST_CASE("sweep rows match independent evaluations") {
    sweep_spec spec;
    spec.l_start = 300e-9;
    spec.l_stop = 800e-9;
    spec.l_steps = 2;
    spec.temperature = 300.0;
    spec.models = {model_tag::gold_corrected, model_tag::exact, model_tag::low_t,
                   model_tag::high_t, model_tag::casimir_zero_t};

    const auto rows = sweep(spec, default_policy);
    REQUIRE(rows.size() == 10);

    // canonical model order within each grid point, grid-major
    const model_tag order[] = {model_tag::exact, model_tag::low_t, model_tag::high_t,
                               model_tag::casimir_zero_t, model_tag::gold_corrected};
    for (int i = 0; i < 10; ++i) {
        CHECK(rows[i].model == order[i % 5]);
        CHECK(rows[i].grid_index == i / 5);
        CHECK(rows[i].status == status_code::ok);
    }
    CHECK(rows[0].separation == 300e-9);
    CHECK(rows[5].separation == 800e-9);

    const auto c = compare_models({800e-9, 300.0}, default_policy);
    CHECK(rows[5].energy == c.exact);
    CHECK(rows[6].energy == c.low_t);
    CHECK(rows[7].energy == c.high_t);
    CHECK(rows[8].energy == c.casimir);
    CHECK(rows[9].energy == gold_corrected_energy({800e-9, 300.0}).value);
    CHECK(rows[9].has_correction);
    CHECK(rows[9].correction_factor == 0.75);
    CHECK(rows[5].tau_value == tau({800e-9, 300.0}));
    CHECK(rows[5].pressure == exact_pressure({800e-9, 300.0}, default_policy).value);
}

TEST_CASE("sweeps are deterministic") {
    sweep_spec spec;
    spec.l_start = 250e-9;
    spec.l_stop = 2e-6;
    spec.l_steps = 7;
    spec.scale = sweep_scale::log;
    spec.temperature = 300.0;
    spec.models = {model_tag::exact, model_tag::low_t};
    spec.include_correction = true;

    const auto a = sweep(spec, default_policy);
    const auto b = sweep(spec, default_policy);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].separation == b[i].separation);
        CHECK(a[i].energy == b[i].energy);
        CHECK(a[i].pressure == b[i].pressure);
        CHECK(a[i].energy_truncation_error == b[i].energy_truncation_error);
        CHECK(a[i].correction_factor == b[i].correction_factor);
    }
}

TEST_CASE("casimir-formula deviation grows along a log sweep") {
    sweep_spec spec;
    spec.l_start = 100e-9;
    spec.l_stop = 10e-6;
    spec.l_steps = 25;
    spec.scale = sweep_scale::log;
    spec.temperature = 300.0;
    spec.models = {model_tag::exact, model_tag::casimir_zero_t};

    const auto rows = sweep(spec, default_policy);
    REQUIRE(rows.size() == 50);
    double prev = -1.0;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        const double dev =
            std::fabs(rows[i + 1].energy - rows[i].energy) / std::fabs(rows[i].energy);
        CHECK(dev > prev);
        prev = dev;
    }
}

TEST_CASE("out-of-table correction lookups do not destroy a sweep") {
    sweep_spec spec;
    spec.l_start = 250e-9;
    spec.l_stop = 850e-9;
    spec.l_steps = 7;  // 250, 350, ..., 850 nm
    spec.temperature = 300.0;
    spec.include_correction = true;

    const auto rows = sweep(spec, default_policy);
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) CHECK(row.status == status_code::ok);
    CHECK(!rows.front().has_correction);
    CHECK(!rows.back().has_correction);
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) CHECK(rows[i].has_correction);
}

TEST_CASE("a failing model evaluation is captured per row") {
    sweep_spec spec;
    spec.l_start = 250e-9;
    spec.l_stop = 850e-9;
    spec.l_steps = 7;
    spec.temperature = 300.0;
    spec.models = {model_tag::exact, model_tag::gold_corrected};

    const auto rows = sweep(spec, default_policy);
    REQUIRE(rows.size() == 14);
    for (std::size_t i = 0; i < rows.size(); i += 2) CHECK(rows[i].status == status_code::ok);
    CHECK(rows[1].status == status_code::range);   // 250 nm: outside the table
    CHECK(!rows[1].error.empty());
    CHECK(rows[13].status == status_code::range);  // 850 nm
    for (std::size_t i = 3; i + 2 < rows.size(); i += 2)
        CHECK(rows[i].status == status_code::ok);
}

TEST_CASE("sweep specs are validated") {
    sweep_spec spec;
    spec.l_start = 800e-9;
    spec.l_stop = 300e-9;
    spec.l_steps = 5;
    spec.temperature = 300.0;
    CHECK_THROWS_AS(sweep(spec, default_policy), invalid_input_error);

    spec.l_start = 300e-9;
    spec.l_stop = 800e-9;
    spec.l_steps = 1;
    CHECK_THROWS_AS(sweep(spec, default_policy), invalid_input_error);

    spec.l_steps = 5;
    spec.temperature = -3.0;
    CHECK_THROWS_AS(sweep(spec, default_policy), invalid_input_error);

    spec.temperature = 300.0;
    CHECK_NOTHROW(sweep(spec, default_policy));
}

TEST_CASE("an empty model list means the exact model") {
    sweep_spec spec;
    spec.l_start = 400e-9;
    spec.l_stop = 500e-9;
    spec.l_steps = 2;
    spec.temperature = 300.0;
    const auto rows = sweep(spec, default_policy);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].model == model_tag::exact);
    CHECK(rows[1].model == model_tag::exact);
}
