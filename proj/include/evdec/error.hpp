#pragma once

#include <stdexcept>
#include <string>

namespace evdec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different frames, or a subset has bits outside its frame.
class FrameMismatch : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition (parameter out of range,
/// length mismatch, empty set where a non-empty one is required, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Input data fails validation (non-normalized mass, duplicate labels, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Möbius inversion produced a clearly negative mass.
class NotABeliefFunction : public Error {
public:
    using Error::Error;
};

/// An enumeration or frame exceeds a configured size cap.
class SizeLimit : public Error {
public:
    using Error::Error;
};

/// The LP solver could not conclude (iteration cap hit).
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace evdec
