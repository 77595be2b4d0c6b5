#include "units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "constants.hpp"

namespace casimir {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

constexpr const char* micro_sign_m = "\xc2\xb5m";  // "µm"

// decimal exponent shift applied by each length suffix
long suffix_shift(const std::string& u) {
    if (u == "nm") return -9;
    if (u == "um" || u == micro_sign_m) return -6;
    return 0;  // "m"
}

// shortest decimal spelling that strtod maps back to the same double
std::string shortest_repr(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// value * 10^shift via the decimal spelling: rewrite the exponent of the
// canonical form and convert once, so the result is the correctly rounded
// double of the shifted decimal.  0.8 shifted by -6 lands bitwise on the
// same double as the literal 0.8e-6, which scaling by 1e-6 would not.
double shift_decimal(double value, long shift) {
    std::string spelled = shortest_repr(value);
    const size_t epos = spelled.find_first_of("eE");
    if (epos != std::string::npos) {
        shift += std::strtol(spelled.c_str() + epos + 1, nullptr, 10);
        spelled.erase(epos);
    }
    spelled += "e" + std::to_string(shift);
    return std::strtod(spelled.c_str(), nullptr);
}

} // namespace

quantity parse_quantity(const std::string& text) {
    // numeric part: [+-]? (digit | '.')+ ([eE][+-]?digits)?
    const size_t n = text.size();
    size_t i = 0;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    size_t digits = 0, dots = 0;
    while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
        if (text[i] == '.') ++dots; else ++digits;
        ++i;
    }
    if (digits == 0 || dots > 1)
        throw invalid_input_error("malformed number in quantity '" + text + "'");

    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        size_t exp_digits = 0;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) { ++exp_digits; ++j; }
        if (exp_digits == 0)
            throw invalid_input_error("malformed exponent in quantity '" + text + "'");
        i = j;
    }

    quantity q;
    q.unit = text.substr(i);
    q.magnitude = std::strtod(text.substr(0, i).c_str(), nullptr);
    if (!std::isfinite(q.magnitude))
        throw invalid_input_error("number out of range in quantity '" + text + "'");

    if (q.unit.empty()) {
        q.kind = unit_kind::none;
        q.value_si = q.magnitude;
    } else if (q.unit == "K") {
        q.kind = unit_kind::temperature;
        q.value_si = q.magnitude;
    } else if (q.unit == "m" || q.unit == "nm" || q.unit == "um" || q.unit == micro_sign_m) {
        q.kind = unit_kind::length;
        // Derive value_si from the canonical spelling of the magnitude, not
        // from the input spelling, so it is a pure function of (magnitude,
        // unit) and format/parse round-trips close bitwise.
        q.value_si = shift_decimal(q.magnitude, suffix_shift(q.unit));
        if (!std::isfinite(q.value_si))
            throw invalid_input_error("length out of range in quantity '" + text + "'");
        if (!(q.value_si > 0.0))
            throw invalid_input_error("length must be positive in quantity '" + text + "'");
    } else {
        throw invalid_input_error("unknown unit '" + q.unit + "' in quantity '" + text + "'");
    }
    return q;
}

std::string format_quantity(const quantity& q) {
    if (!std::isfinite(q.magnitude))
        throw invalid_input_error("cannot format non-finite magnitude");
    return shortest_repr(q.magnitude) + q.unit;
}

double tau(const query_point& p) {
    validate_point(p);
    if (p.temperature == 0.0) return 0.0;
    return 2.0 * physical_constants::boltzmann * p.temperature * p.separation /
           physical_constants::hbar_c;
}

} // namespace casimir
