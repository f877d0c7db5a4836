#pragma once

#include <stdexcept>
#include <string>

namespace logder {

// User-facing input problems (bad files, unknown families, precondition
// violations on user-supplied data). CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal cross-check failures (two independent computations disagree,
// an exhaustive case split falls through, a mod-p oracle vote fails).
// CLI maps these to exit code 3. These should never fire on valid input.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Generic-line sampling exhausted its retry budget.
struct GenericityError : InputError {
    explicit GenericityError(const std::string& msg) : InputError(msg) {}
};

}  // namespace logder
