#pragma once

#include <stdexcept>
#include <string>

namespace monotile {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: overlapping parts, out-of-range vertices, bad files.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionUndefined : public Error {
public:
    using Error::Error;
};

// Custom family has no graph of the requested size.
class UnavailableMember : public Error {
public:
    using Error::Error;
};

// Exact mode requested on an instance above the configured cap.
class ModeError : public Error {
public:
    using Error::Error;
};

// Enumeration stopped by its budget; `explored` items were fully checked.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, unsigned long long explored)
        : Error(what), explored_(explored) {}
    unsigned long long explored() const noexcept { return explored_; }

private:
    unsigned long long explored_;
};

// An internal invariant that a proven statement guarantees was observed to fail.
class ClaimViolation : public Error {
public:
    using Error::Error;
};

} // namespace monotile
