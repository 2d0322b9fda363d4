#include "core/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace irledger::numfmt {

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;  // 64 bytes always suffice for a double
    return std::string(buf, ptr);
}

std::string fixed(double v, int decimals) {
    // Scale, round half away from zero, then typeset from the integer part so
    // the result never depends on printf rounding modes.
    long double scale = 1.0L;
    for (int i = 0; i < decimals; ++i) scale *= 10.0L;
    long double scaled = static_cast<long double>(v) * scale;
    long long units = llroundl(scaled);
    bool negative = units < 0;
    unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(units)
                                      : static_cast<unsigned long long>(units);
    unsigned long long divisor = 1;
    for (int i = 0; i < decimals; ++i) divisor *= 10;
    std::string out;
    if (negative) out += '-';
    out += std::to_string(mag / divisor);
    if (decimals > 0) {
        std::string frac = std::to_string(mag % divisor);
        out += '.';
        out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0');
        out += frac;
    }
    return out;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace irledger::numfmt
