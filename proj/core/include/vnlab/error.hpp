#pragma once

#include <stdexcept>
#include <string>

namespace vnlab {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different fields, groups, or have incompatible shapes.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Mathematically undefined request (division by zero, non-normal kernel, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A construction would exceed the configured group size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

// Malformed textual or JSON input.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace vnlab
