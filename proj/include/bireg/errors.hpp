#pragma once

#include <stdexcept>
#include <string>

namespace bireg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
public:
    using Error::Error;
};

class EmptyRing : public Error {
public:
    using Error::Error;
};

class NotBihomogeneous : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidRegion : public Error {
public:
    using Error::Error;
};

class NeedsWindow : public Error {
public:
    using Error::Error;
};

class ResolutionTooLong : public Error {
public:
    using Error::Error;
};

class InvalidIndex : public Error {
public:
    using Error::Error;
};

class NoStabilization : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace bireg
