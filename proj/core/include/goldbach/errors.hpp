#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

/// Raised when two routes that must agree exactly (cross-algorithm sums,
/// guaranteed-divisibility quotients, convolution spot checks) disagree.
/// This always indicates a bug, never bad user input.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by polynomial division when the divisor is not monic.
class unsupported_divisor : public std::invalid_argument {
public:
    explicit unsupported_divisor(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace goldbach
