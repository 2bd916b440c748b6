#pragma once

#include <stdexcept>
#include <string>

namespace ptwave {

// Base of everything thrown deliberately by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad inputs: parameters, domains, scenarios. CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Numerical breakdowns: tolerances, brackets, conditioning. CLI exit code 1.
class NumericError : public Error {
public:
    using Error::Error;
};

class InvalidParams : public InputError {
public:
    using InputError::InputError;
};

class InvalidSpeed : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class DomainViolation : public InputError {
public:
    using InputError::InputError;
};

class NotAnEquilibrium : public InputError {
public:
    using InputError::InputError;
};

class NoCenter : public InputError {
public:
    using InputError::InputError;
};

class NoPeriodAnnulus : public InputError {
public:
    using InputError::InputError;
};

class ZeroDispersion : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class EnergyOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class DuplicateWeight : public InputError {
public:
    using InputError::InputError;
};

class BadScenario : public InputError {
public:
    using InputError::InputError;
};

class Overflow : public InputError {
public:
    using InputError::InputError;
};

class BracketFailure : public NumericError {
public:
    using NumericError::NumericError;
};

class BranchSolveFailure : public NumericError {
public:
    using NumericError::NumericError;
};

class ToleranceNotMet : public NumericError {
public:
    using NumericError::NumericError;
};

class AmbiguousSignChange : public NumericError {
public:
    using NumericError::NumericError;
};

class IllConditioned : public NumericError {
public:
    using NumericError::NumericError;
};

class EscapedAnnulus : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace ptwave
