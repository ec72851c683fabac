#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simplexcolor {

/// Malformed or out-of-contract input (bad dimensions, bad flags, bad files).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File content that could not be parsed. Carries a 1-based line/column when known.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : InputError(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A requested operation is not defined for this ambient dimension.
class UnsupportedDimensionError : public InputError {
public:
    using InputError::InputError;
};

/// The complex violates a structural invariant required by the operation
/// (for example a facet shared by three simplices).
class InvalidComplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Peeling got stuck: every facet of the residual complex is glued.
/// Geometric complexes never reach this state; abstract ones can.
class UnrealizableComplexError : public std::runtime_error {
public:
    UnrealizableComplexError(const std::string& what, std::size_t residual_size)
        : std::runtime_error(what), residual_size_(residual_size) {}

    std::size_t residual_size() const noexcept { return residual_size_; }

private:
    std::size_t residual_size_;
};

/// The exact chromatic oracle refuses graphs above its node limit.
class LimitExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant of the nested-hull search failed. Indicates either a
/// bug or an input that is not a valid geometric complex.
class GeometryInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace simplexcolor
