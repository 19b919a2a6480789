#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>

namespace hodmd::detail {

/// Shortest text form that round-trips a double exactly (17 significant
/// digits).
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Strict full-token double parse; returns false on trailing garbage.
inline bool parse_double(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace hodmd::detail
