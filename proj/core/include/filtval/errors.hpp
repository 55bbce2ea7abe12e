#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filtval {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different carrier rings.
class ring_mismatch : public error {
public:
    using error::error;
};

/// Exact division with a zero divisor argument.
class divisor_zero : public error {
public:
    using error::error;
};

/// Operation not defined for the carrier (e.g. gcd over Z/n).
class unsupported_ring : public error {
public:
    using error::error;
};

/// gcd(0, 0) requested.
class both_zero : public error {
public:
    using error::error;
};

/// Element grammar violation; carries the byte offset of the failure.
class syntax_error : public error {
public:
    syntax_error(const std::string& message, std::size_t position)
        : error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A literal parsed fine but does not denote an element of the target ring.
class coefficient_not_in_ring : public error {
public:
    using error::error;
};

/// Ideal constructed from an empty generator list.
class empty_generators : public error {
public:
    using error::error;
};

/// Explicit level chain whose first entry is not the unit ideal.
class first_level_not_unit : public error {
public:
    using error::error;
};

/// Strongness queried beyond the validated depth.
class not_validated : public error {
public:
    using error::error;
};

/// Exhaustive search exceeded its hard cap without a result.
class budget_exceeded : public error {
public:
    using error::error;
};

/// Audit configuration rejected; carries a JSON-pointer path to the problem.
class config_error : public error {
public:
    config_error(const std::string& pointer, const std::string& message)
        : error(pointer + ": " + message), pointer_(pointer) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

}  // namespace filtval
