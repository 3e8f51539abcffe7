#pragma once

#include <stdexcept>
#include <string>

namespace hamcirc {

/// Failure classes used across the library. The CLI maps them to exit codes.
enum class errc {
    input,            // malformed argument, file, or id
    precondition,     // a stated hypothesis of the operation does not hold
    structure,        // expected structural property (clique class etc.) missing
    connectivity,     // window not connected enough yet; caller may deepen
    search_exhausted, // bounded exact search gave up; caller may deepen
    integrity,        // oracle inconsistency (asymmetric adjacency, bad degree)
    internal,         // invariant the theory guarantees failed: a bug
};

inline const char* errc_name(errc k) {
    switch (k) {
    case errc::input: return "input";
    case errc::precondition: return "precondition";
    case errc::structure: return "structure";
    case errc::connectivity: return "connectivity";
    case errc::search_exhausted: return "search-exhausted";
    case errc::integrity: return "integrity";
    case errc::internal: return "internal";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

inline void expect(bool cond, errc kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace hamcirc
