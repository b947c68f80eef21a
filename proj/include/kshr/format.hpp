#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace kshr {

// Shortest decimal form that round-trips to the same double, via
// std::to_chars. Fully specified by the standard, so output files are
// byte-identical across platforms.
inline std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace kshr
