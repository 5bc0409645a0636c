#pragma once

#include <stdexcept>
#include <string>

namespace fq {

// Bad user-facing configuration (unknown key, width cap, invalid enum).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal contract (index out of range, mismatched widths).
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Problem exceeds what this build can solve (oracle width cap).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical procedure failed to converge or verify.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fq
