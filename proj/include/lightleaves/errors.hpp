#pragma once

#include <stdexcept>
#include <string>

namespace lightleaves {

// User-facing input problems: bad configuration, malformed words, invalid
// parameters. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A resource guard fired (enumeration size, word length, ideal size).
// The CLI maps these to exit code 3; messages name the guard.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check that can never fail on valid data failed. Exit code 4.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lightleaves
