#pragma once

#include <stdexcept>
#include <string>

namespace opnkit {

/// Input outside an operation's domain (n = 0, non-prime where a prime is required, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that does not parse as a factored integer or candidate line.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The configured effort budget was exhausted. The input is too hard at desk
/// scale, which says nothing about its correctness.
class EffortExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace opnkit
