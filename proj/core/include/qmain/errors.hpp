#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmain {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidEdge : public Error {
public:
    using Error::Error;
};

class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// Text input could not be decoded; `offset` is the 0-based byte position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class NotATree : public Error {
public:
    using Error::Error;
};

class NotUnicyclic : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A verified classification statement failed on an enumerated graph.
/// Carries graph6 witnesses so the failure is reproducible from the message.
class ClassificationViolation : public Error {
public:
    using Error::Error;
};

class ConsistencyViolation : public Error {
public:
    using Error::Error;
};

} // namespace qmain
