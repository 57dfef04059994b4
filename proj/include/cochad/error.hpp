#pragma once

#include <stdexcept>
#include <string>

namespace cochad {

/// Bad argument: out-of-range index, unsupported family/t, length mismatch.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request whose search space exceeds the configured budget.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input text (group tables, polynomial files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cochad
