#pragma once
// Error model shared by every module: typed runtime errors with a stable
// category, thrown inside the core and mapped to status codes at the C
// boundary.

#include <stdexcept>
#include <string>

namespace irledger {

enum class errc {
    io,            // file unreadable or unwritable
    parse,         // malformed input text
    validation,    // well-formed input violating a domain invariant
    not_found,     // lookup by name failed
    infeasible,    // no catalog instance satisfies a requirement
    duplicate,     // uniqueness violation
    empty_result,  // an operation requiring survivors found none
    scoring,       // AMRS / score undefined for the given inputs
    network,       // probe connection-level failure
    usage,         // invalid arguments to an operation
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::io: return "io";
        case errc::parse: return "parse";
        case errc::validation: return "validation";
        case errc::not_found: return "not-found";
        case errc::infeasible: return "infeasible";
        case errc::duplicate: return "duplicate";
        case errc::empty_result: return "empty-result";
        case errc::scoring: return "scoring";
        case errc::network: return "network";
        case errc::usage: return "usage";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
    throw error(code, std::move(message));
}

}  // namespace irledger
