#pragma once

#include <stdexcept>
#include <string>

namespace polydyn {

// Base class for everything thrown by this library. Subcommand drivers map
// these to exit code 2 (contract/usage violations) while analysis-negative
// verdicts travel through report values, not exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error("dimension: " + msg) {}
};

class ArityError : public Error {
public:
    explicit ArityError(const std::string& msg) : Error("arity: " + msg) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error("index: " + msg) {}
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error("parameter: " + msg) {}
};

// Term-count blowup during iteration; carries the offending iterate index.
class ResourceError : public Error {
public:
    ResourceError(const std::string& msg, int at_iterate)
        : Error("resource: " + msg), at_iterate_(at_iterate) {}
    int at_iterate() const { return at_iterate_; }

private:
    int at_iterate_;
};

class NotOriginFixedError : public Error {
public:
    explicit NotOriginFixedError(const std::string& msg)
        : Error("origin-not-fixed: " + msg) {}
};

class NotInverseError : public Error {
public:
    explicit NotInverseError(const std::string& msg) : Error("not-inverse: " + msg) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& msg)
        : Error("insufficient-data: " + msg) {}
};

class ResonanceError : public Error {
public:
    explicit ResonanceError(const std::string& msg) : Error("resonance: " + msg) {}
};

class EigenbasisError : public Error {
public:
    explicit EigenbasisError(const std::string& msg) : Error("eigenbasis: " + msg) {}
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : Error("convergence: " + msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

// Lexical/syntax/semantic failure in a map-definition file, with position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("parse: " + msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace polydyn
