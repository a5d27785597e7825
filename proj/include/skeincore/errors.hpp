#pragma once

#include <stdexcept>
#include <string>

namespace skeincore {

// Base class for all library failures.
struct SkeinError : std::runtime_error {
    explicit SkeinError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input documents (manifold specs, web expressions, polynomial text).
struct ParseError : SkeinError {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : SkeinError(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

// Structurally valid input that violates a semantic constraint
// (state out of range, marking index out of range, mismatched rings, ...).
struct ValidationError : SkeinError {
    using SkeinError::SkeinError;
};

// A configuration the engine deliberately does not handle
// (e.g. sampling constrained representations for general relators).
struct UnsupportedError : SkeinError {
    using SkeinError::SkeinError;
};

// A work budget was exhausted before completion (Buchberger pair cap,
// polynomial term cap).  Partial data may be attached by the thrower.
struct BudgetError : SkeinError {
    using SkeinError::SkeinError;
};

} // namespace skeincore
