#pragma once

#include <stdexcept>
#include <string>

namespace fraccover {

// A generator was asked for more recursion depth than its documented cap.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Too few usable scales remain for a fit or a trim.
struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input carries no usable variation (e.g. all scales identical).
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fraccover
