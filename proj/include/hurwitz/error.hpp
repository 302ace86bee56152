#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Numeric values are part of the C ABI (see hurwitz.h).
enum class ErrorCode {
    argument = 1,
    size_limit = 2,
    centrality = 3,
    singular = 4,
    verification = 5,
    parse = 6,
    consistency = 7,
    internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(ErrorCode::argument, what) {}
};

class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& what) : Error(ErrorCode::size_limit, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

/// Raised when a parameter makes some r_j or rho_j infinite.
class SingularParameterError : public Error {
public:
    SingularParameterError(const std::string& what, long index)
        : Error(ErrorCode::singular, what), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

/// Two independent formulas for the same quantity disagreed.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(ErrorCode::consistency, what) {}
};

} // namespace hurwitz
