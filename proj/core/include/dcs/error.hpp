#ifndef DCS_ERROR_HPP
#define DCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dcs {

// Base error for invalid inputs and violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when brute-force enumeration would exceed its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Thrown by debug-mode solver checks. Signals an implementation bug, never
// a property of the input; the CLI maps it to exit code 3.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace dcs

#endif
