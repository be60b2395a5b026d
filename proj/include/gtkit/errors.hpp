#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gtkit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to different polynomial rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// A precondition on arguments was violated (index out of range, zero
// polynomial where a nonzero one is required, malformed input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Text input could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

// A computation ran past its resource budget.  This is a distinguished
// failure: callers either propagate it or convert it into a "budget"
// verdict.  It never stands in for a wrong answer.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string kind, std::string where)
        : Error("budget exceeded (" + kind + ") in " + where),
          kind_(std::move(kind)),
          where_(std::move(where)) {}

    // What ran out: "pairs", "seconds", "degree" or "piece_dim".
    const std::string& kind() const { return kind_; }
    // The operation that was interrupted.
    const std::string& where() const { return where_; }

private:
    std::string kind_;
    std::string where_;
};

} // namespace gtkit
