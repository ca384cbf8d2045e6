#pragma once

#include <string>

namespace entrex {

// Locale-independent number printing (always a decimal point).

/// Fixed nine decimal places: 0 -> "0.000000000".
std::string format_fixed9(double value);

/// Shortest round-trip representation: 1.2 -> "1.2".
std::string format_shortest(double value);

}  // namespace entrex
