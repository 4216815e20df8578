#pragma once

#include <stdexcept>
#include <string>

namespace grundy {

// Malformed input: bad file contents, out-of-range indices, repeated items.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates an operation's precondition
// (isolated vertex where none is allowed, gadget size too small, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds the exponential solvers' hard size cap.
class SizeCapError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A produced witness failed independent re-verification.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace grundy
