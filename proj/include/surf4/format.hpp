#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace surf4 {

/// Shortest text that reads back to the same double (never more than 17
/// significant digits). Negative zero prints as "0".
inline std::string format_real(double v)
{
    if (v == 0.0)
        return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Fixed number of significant digits, used for plot coordinates.
inline std::string format_short(double v, int digits = 6)
{
    if (v == 0.0 || std::abs(v) < 1e-12)
        return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

} // namespace surf4
