#pragma once

#include <stdexcept>
#include <string>

namespace fqt {

// Malformed or inconsistent user input (bad tokens, non-prime p, reducible modulus, mixed fields).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured cap on enumeration or search size was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by zero in F_q.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An internal invariant was violated. Always a bug, never valid output.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fqt
