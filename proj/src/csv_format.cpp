#include "peridisp/csv_format.hpp"

#include <cmath>
#include <cstdio>

namespace peridisp {

std::string format_float(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace peridisp
