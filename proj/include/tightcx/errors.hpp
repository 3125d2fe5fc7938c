#pragma once

#include <stdexcept>
#include <string>

namespace tightcx {

/// Input or argument violates an operation's contract.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A subset sweep would exceed the configured vertex limit.  Callers may
/// retry with a larger explicit limit; silent truncation never happens.
class SweepLimitExceeded : public std::runtime_error {
public:
    SweepLimitExceeded(const std::string& what, int vertices, int limit)
        : std::runtime_error(what), vertices(vertices), limit(limit) {}
    int vertices;
    int limit;
};

/// A proven inequality failed; this indicates an arithmetic bug in the
/// engine, never a property of the input.
class InternalCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tightcx
