#pragma once

#include <cstdio>
#include <string>

namespace plcsim {

/// Formats a double with 10 significant digits, '.' decimal point, no
/// thousands separators. All CSV output goes through this.
inline std::string fmt_g10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace plcsim
