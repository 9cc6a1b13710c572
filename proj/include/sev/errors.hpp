#pragma once

#include <stdexcept>
#include <string>

namespace sev {

// Precondition violations on user-supplied values.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inputs the implemented formulas do not cover.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The oracle could not realize a generic configuration, or an internal
// consistency check of the oracle failed.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sev
