#pragma once

#include <stdexcept>
#include <string>

namespace optforce {

// Bad input to a physics operation (precondition or type invariant).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A well-posed call that failed numerically.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDrive : public DomainError {
public:
    using DomainError::DomainError;
};

class SidebandOutOfBand : public DomainError {
public:
    using DomainError::DomainError;
};

class OutOfBand : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidRates : public DomainError {
public:
    using DomainError::DomainError;
};

class StepFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularGenerator : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonHermitianState : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateDenominator : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace optforce
