#pragma once

#include <array>

#include "types.hpp"

namespace casimir {

// Measured correction factors for real gold surfaces relative to the
// ideal-conductor result, tabulated on a coarse (separation, temperature)
// grid. factor_zero_t is the T = 0 column, factor_room_t the T = 300 K one.
struct gold_table_row {
    double separation_nm;
    double separation_m;
    double factor_zero_t;
    double factor_room_t;
};

// the six tabulated rows, 300 nm .. 800 nm
const std::array<gold_table_row, 6>& gold_table();

// Bilinear interpolation of the table: piecewise-linear in separation along
// each temperature column, then linear in T between the two columns.
// Queries outside l in [300 nm, 800 nm] or T in [0, 300] K are range errors;
// grid nodes reproduce the tabulated factors exactly.
double gold_correction_factor(const query_point& p);

// Ideal-conductor leading term scaled by the tabulated factor. The factor
// multiplies only the zero-temperature term; thermal corrections for real
// metal surfaces are outside the table's scope.
energy_result gold_corrected_energy(const query_point& p);
pressure_result gold_corrected_pressure(const query_point& p);

} // namespace casimir
