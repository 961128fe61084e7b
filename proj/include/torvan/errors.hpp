#pragma once

#include <stdexcept>
#include <string>

namespace torvan {

/// Invalid input: bad dimensions, violated setup invariants, malformed data.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configurable resource cap (reduction steps, enumeration size) was hit.
/// Always an explicit failure, never a silent truncation.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace torvan
