#ifndef DELSUB_ERRORS_HPP
#define DELSUB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace delsub {

/// Operands disagree on length or alphabet size.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A 1-based position lies outside [1, n].
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Arguments outside the operation's mathematical domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Channel parameters violate t + s < n (or are negative).
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested sample size exceeds the ball it is drawn from.
struct CapacityError : std::runtime_error {
    std::size_t ball_size;
    CapacityError(const std::string& msg, std::size_t size)
        : std::runtime_error(msg), ball_size(size) {}
};

/// Enumeration refused: estimated cost exceeds the configured limit.
/// Overridable with a force flag where the API offers one.
struct GuardrailError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would exceed 64 bits.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Malformed or inconsistent code file.
struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace delsub

#endif
