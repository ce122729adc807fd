#pragma once

#include <cmath>
#include <complex>
#include <nlohmann/json.hpp>

namespace bmoa {

/// Round to `digits` significant digits. All JSON-bound floats go through
/// this so that reports are reproducible byte for byte.
inline double round_sig(double x, int digits = 12) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::fabs(x)))));
    return std::round(x * mag) / mag;
}

inline nlohmann::json json_complex(std::complex<double> z, int digits = 12) {
    return nlohmann::json::array({round_sig(z.real(), digits), round_sig(z.imag(), digits)});
}

}  // namespace bmoa
