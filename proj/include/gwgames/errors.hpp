#pragma once

#include <stdexcept>
#include <string>

namespace gwg {

// Thrown when a numeric procedure cannot deliver its contract
// (non-convergence, sample budget exhausted, non-monotone scan predicate...).
// Bad inputs (malformed literals, invalid probabilities) use std::invalid_argument.
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gwg
