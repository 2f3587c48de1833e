#pragma once

#include <stdexcept>
#include <string>

namespace linkvol {

/// Base for every error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a type invariant (bad symbol, non-primitive slope, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Equation has infinitely many solutions (0 = d * 0).
class InfiniteSolutions : public Error {
public:
    using Error::Error;
};

/// Parameter outside the family where the construction is meaningful.
class DegenerateParameter : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration would exceed its candidate budget.
class TooLarge : public Error {
public:
    TooLarge(const std::string& what, double candidates, double limit)
        : Error(what), candidates_(candidates), limit_(limit) {}
    double candidates() const noexcept { return candidates_; }
    double limit() const noexcept { return limit_; }

private:
    double candidates_;
    double limit_;
};

} // namespace linkvol
