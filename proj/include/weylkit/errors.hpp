#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

// Raised when an iterative numeric routine cannot reach its requested
// accuracy (quadrature budget exhausted, series cancellation too severe).
// Callers distinguish this from input-validation failures, which use the
// std::invalid_argument / std::domain_error / std::out_of_range family.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace weylkit
