#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 / edge-list / JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation would break a coloring invariant, or its arguments are out
/// of range for the coloring (palette bounds, stale chains, missing edges).
class ColoringError : public Error {
public:
    using Error::Error;
};

/// The input is not the structure it claims to be (e.g. not a multifan).
class StructureError : public Error {
public:
    using Error::Error;
};

/// A swap script failed; `step()` is the zero-based index of the failing step.
class ScriptError : public Error {
public:
    ScriptError(std::size_t step, const std::string& reason)
        : Error("step " + std::to_string(step) + ": " + reason), step_(step), reason_(reason) {}

    std::size_t step() const noexcept { return step_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t step_;
    std::string reason_;
};

/// An exact search exceeded its time budget.
class TimeoutError : public Error {
public:
    using Error::Error;
};

/// A brute-force search was asked to go beyond its size budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace chroma
