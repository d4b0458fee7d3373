#pragma once

#include <string>

namespace peridisp {

/// Floating-point formatting used by every CSV writer: 17 significant digits,
/// '.' decimal point, locale-independent.
std::string format_float(double v);

} // namespace peridisp
