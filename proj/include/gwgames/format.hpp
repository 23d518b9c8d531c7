#pragma once

#include <cstdio>
#include <string>

namespace gwg {

/// All floating-point output goes through here: 12 significant digits,
/// shortest form. Keeps reports byte-identical across runs.
inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

} // namespace gwg
