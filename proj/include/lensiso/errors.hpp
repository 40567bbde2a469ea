#pragma once

#include <stdexcept>
#include <string>

namespace lensiso {

// Parse failure in a textual input. line/column are 1-based.
struct SyntaxError : std::runtime_error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// A structural invariant of a value type is violated.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An index or cut position is out of range.
struct IndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lens parameters outside the supported family (notably p = 1).
struct UnsupportedLens : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a diagram in standard one-chord form.
struct NotStandardForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Diagram traversal decomposes into more than one component.
struct MultiComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A step was requested on a diagram whose inner code is empty.
struct NoCrossings : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two diagrams live in different lens spaces.
struct LensMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inner codes are not related by any rotation.
struct NotCyclicallyRelated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A step record does not match the state it claims to act on.
struct InvalidStep : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An elementary rewrite does not match the code at the stated positions.
struct PatternMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A trace failed verification where a verified trace was required.
struct InvalidTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The router could not produce a crossing-faithful layout in budget.
struct LayoutFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lensiso
