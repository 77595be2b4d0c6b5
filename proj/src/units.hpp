#pragma once

#include <string>

#include "types.hpp"

namespace casimir {

enum class unit_kind { none, length, temperature };

// A parsed number with its unit suffix. value_si is meters for lengths,
// kelvin for temperatures, and the bare magnitude otherwise.
struct quantity {
    double magnitude = 0.0;
    std::string unit;  // "", "m", "nm", "um", "µm", or "K", exactly as given
    unit_kind kind = unit_kind::none;
    double value_si = 0.0;
};

// Parses "<number><suffix>" with suffix from {m, um, µm, nm, K} or empty.
// Length conversion is decimal-exact: the suffix shift is applied to the
// decimal exponent before a single string->double conversion, so "300nm"
// yields a double bitwise-equal to the literal 300e-9.  value_si depends
// only on (magnitude, unit), never on the spelling of the number.
quantity parse_quantity(const std::string& text);

// Inverse of parse_quantity for representable quantities:
// parse_quantity(format_quantity(q)) == q bitwise.
std::string format_quantity(const quantity& q);

// %.17g — lossless round-trip formatting for doubles.
std::string fmt17(double v);

// Regime parameter tau = 2 k T l / (hbar c); exactly 0 at T = 0.
double tau(const query_point& p);

} // namespace casimir
