#pragma once

#include <stdexcept>
#include <string>

namespace tpoly {

enum class ErrorKind {
    Validation,   // malformed or out-of-family input
    Computation,  // a guard fired while computing (inexact decomposition, budget)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& what) {
    throw Error(ErrorKind::Validation, what);
}
[[noreturn]] inline void fail_computation(const std::string& what) {
    throw Error(ErrorKind::Computation, what);
}

}  // namespace tpoly
