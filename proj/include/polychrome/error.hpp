#pragma once

#include <stdexcept>
#include <string>

namespace polychrome {

/// Broad failure classes. The CLI maps each to a distinct exit code.
enum class ErrorKind {
    precondition,  // caller broke an operation's contract
    sizing,        // requested geometry cannot fit (toast generation, plan constants)
    format,        // malformed or wrong-version input file
    io,            // filesystem failure
    verification,  // a checker rejected an object the caller asserted was valid
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorKind::precondition, message);
}

}  // namespace polychrome
