#pragma once

#include <stdexcept>
#include <string>

namespace vfock {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input: rationals, half-integers, JSON documents.
class ParseError : public Error {
public:
    using Error::Error;
};

// A precondition on values was violated (non-partition, wrong charge, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An operator was asked to act with a truncation bound too small to be exact.
class TruncationError : public Error {
public:
    using Error::Error;
};

// An identity that is supposed to hold was found to fail.
class FalsifiedError : public Error {
public:
    using Error::Error;
};

} // namespace vfock
