#pragma once
// Locale-independent number formatting used by every emitter. Shortest
// round-trip representations keep golden outputs byte-stable; fixed-decimal
// rounding is half-up to match printed money and score tables.

#include <string>

namespace irledger::numfmt {

// Shortest decimal string that parses back to exactly the same double
// ("39.7", "0.0385", "1e+30").
std::string shortest(double v);

// v rounded half-up (half away from zero) to `decimals` fractional digits,
// rendered with exactly that many digits ("183.60", "19.127").
std::string fixed(double v, int decimals);

// Parse a decimal string as double; returns false on trailing garbage.
bool parse_double(const std::string& text, double& out);

}  // namespace irledger::numfmt
