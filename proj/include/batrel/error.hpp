#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace batrel {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad network text, invalid arcs,
/// probabilities outside [0,1], dimension mismatches, out-of-range counts.
class InputError : public Error {
public:
    using Error::Error;
};

/// A structural rule of the network is broken (self-loop, parallel arc,
/// bad node label). Carries the offending arc index when there is one.
class ValidationError : public InputError {
public:
    explicit ValidationError(const std::string& what,
                             std::optional<std::size_t> arc = std::nullopt)
        : InputError(what), arc_(arc) {}

    std::optional<std::size_t> arc_index() const noexcept { return arc_; }

private:
    std::optional<std::size_t> arc_;
};

/// Syntax or validation failure in a network file, tagged with its 1-based
/// line and, when read from disk, the file path.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& detail, const std::string& origin = {})
        : InputError((origin.empty() ? "line " : origin + ":") + std::to_string(line) + ": " +
                     detail),
          line_(line),
          detail_(detail) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// The request is well formed but exceeds what the chosen method will do
/// (e.g. exact enumeration above the arc cap).
class CapabilityError : public Error {
public:
    using Error::Error;
};

}  // namespace batrel
