#pragma once

#include <stdexcept>
#include <string>

namespace curvecliff {

// Invalid input or violated operation precondition.
struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (JSON syntax or schema).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two theorems claimed incompatible facts about the same Betti entry.
struct ContradictionError : std::logic_error {
    using std::logic_error::logic_error;
};

// Exhaustive enumeration was requested beyond the configured size guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace curvecliff
