#pragma once

#include <stdexcept>
#include <string>

namespace jjarray {

/// Failure categories. The CLI maps these onto exit codes and the
/// single-line `error[<kind>]:` prefix on standard error.
enum class ErrorKind {
    Syntax,      // malformed topology document or CLI value
    Validation,  // well-formed input that violates an invariant
    Domain,      // physical parameters outside their valid range
    Singular,    // coupling matrix not positive definite
    Numerical,   // other numerical failure
    Io,          // unreadable input or unwritable output
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace jjarray
