#pragma once

#include <array>
#include <cstdio>
#include <string>

namespace mammo {

/// Fixed formatting for reals in CSV/JSON artifacts: 6 significant
/// digits, '.' decimal separator, no locale dependence.
inline std::string format_real(double v) {
    std::array<char, 40> buf;
    std::snprintf(buf.data(), buf.size(), "%.6g", v);
    return std::string(buf.data());
}

} // namespace mammo
