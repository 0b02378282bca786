#pragma once

#include <stdexcept>
#include <string>

namespace malg {

// Base class for everything thrown on purpose by this library. Conditions that
// indicate a caller error (mismatched parents, violated preconditions) and
// conditions that are legitimate negative answers with a witness both land
// here; callers that care about the distinction catch the concrete type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two elements from different parent algebras fed into one operation.
class ParentMismatchError : public Error {
public:
    ParentMismatchError() : Error("elements belong to different parent algebras") {}
    explicit ParentMismatchError(const std::string& what) : Error(what) {}
};

// An exhaustive search was asked to run past its configured bound.
class BoundExceededError : public Error {
public:
    explicit BoundExceededError(const std::string& what) : Error(what) {}
};

class NotAbsolutelyContinuousError : public Error {
public:
    explicit NotAbsolutelyContinuousError(const std::string& what) : Error(what) {}
};

class NotMuSemifiniteError : public Error {
public:
    explicit NotMuSemifiniteError(const std::string& what) : Error(what) {}
};

class NotSemifiniteError : public Error {
public:
    explicit NotSemifiniteError(const std::string& what) : Error(what) {}
};

// Step function fed to the linear extension carries an infinite coefficient,
// so its sup norm is undefined.
class InfiniteCoefficientError : public Error {
public:
    explicit InfiniteCoefficientError(const std::string& what) : Error(what) {}
};

// Requested projection target is not dyadic (or otherwise outside the exactly
// representable range).
class UnsupportedPrecisionError : public Error {
public:
    explicit UnsupportedPrecisionError(const std::string& what) : Error(what) {}
};

// Symbolic cardinal arithmetic asked for something the finite model cannot
// tally (e.g. uncountable replication).
class UnsupportedCardinalityError : public Error {
public:
    explicit UnsupportedCardinalityError(const std::string& what) : Error(what) {}
};

// Start element of the shrinking-upper-bound walk is not an upper bound.
class NotUpperBoundError : public Error {
public:
    explicit NotUpperBoundError(const std::string& what) : Error(what) {}
};

// Cayley table fails one of the group axioms; message names the axiom.
class InvalidGroupError : public Error {
public:
    explicit InvalidGroupError(const std::string& what) : Error(what) {}
};

// Input file rejected; message carries line information.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace malg
