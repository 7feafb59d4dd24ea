#ifndef FLEXICOLOR_ERRORS_HPP
#define FLEXICOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flexicolor {

// Bad user input: malformed files, violated preconditions, unknown specs.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured cap (canonical-assignment count, search nodes) was hit.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The computation reached a state the underlying theory rules out.
// Surfaced loudly, never suppressed; the CLI maps it to exit code 4.
struct falsification_alarm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace flexicolor

#endif
