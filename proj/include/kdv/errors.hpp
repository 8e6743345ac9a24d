#pragma once

#include <stdexcept>
#include <string>

namespace kdv {

/// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: rejected before any computation starts. CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Failure while a computation is running. CLI exit code 2.
class SimulationError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure. CLI exit code 3.
class IoError : public Error {
public:
    using Error::Error;
};

class NonPositiveParameter : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class GridTooCoarse : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IncompatibleDirichletData : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidLyapunovParams : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InsufficientSamples : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotAdmissible : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BetaZero : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LengthOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RadiusTooLarge : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptySeries : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SingularMatrix : public SimulationError {
public:
    using SimulationError::SimulationError;
};

class BlowUp : public SimulationError {
public:
    using SimulationError::SimulationError;
};

} // namespace kdv
