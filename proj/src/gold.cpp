#include "gold.hpp"

#include <cmath>

#include "asymptotics.hpp"
#include "units.hpp"

namespace casimir {

const std::array<gold_table_row, 6>& gold_table() {
    static const std::array<gold_table_row, 6> table = {{
        {300.0, 300e-9, 0.74, 0.69},
        {400.0, 400e-9, 0.79, 0.73},
        {500.0, 500e-9, 0.82, 0.74},
        {600.0, 600e-9, 0.85, 0.75},
        {700.0, 700e-9, 0.87, 0.75},
        {800.0, 800e-9, 0.88, 0.75},
    }};
    return table;
}

double gold_correction_factor(const query_point& p) {
    validate_point(p);
    const auto& table = gold_table();
    const double l = p.separation;
    const double T = p.temperature;
    if (l < table.front().separation_m || l > table.back().separation_m)
        throw range_error("separation " + fmt17(l) +
                          " m outside the correction table range [3e-07, 8e-07] m");
    if (T > 300.0)
        throw range_error("temperature " + fmt17(T) +
                          " K outside the correction table range [0, 300] K");

    std::size_t i = 0;
    while (i + 2 < table.size() && l >= table[i + 1].separation_m) ++i;
    const auto& a = table[i];
    const auto& b = table[i + 1];
    // at a grid node the ratio is exactly 0 or 1, so lerp returns the
    // tabulated value bitwise
    const double tl = (l - a.separation_m) / (b.separation_m - a.separation_m);
    const double f_zero = std::lerp(a.factor_zero_t, b.factor_zero_t, tl);
    const double f_room = std::lerp(a.factor_room_t, b.factor_room_t, tl);
    return std::lerp(f_zero, f_room, T / 300.0);
}

energy_result gold_corrected_energy(const query_point& p) {
    const double factor = gold_correction_factor(p);
    return {factor * casimir_energy(p.separation), model_tag::gold_corrected, 0.0, false, {}};
}

pressure_result gold_corrected_pressure(const query_point& p) {
    const double factor = gold_correction_factor(p);
    return {factor * casimir_pressure(p.separation), model_tag::gold_corrected, 0.0};
}

} // namespace casimir
