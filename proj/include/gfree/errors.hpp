#pragma once

#include <stdexcept>
#include <string>

namespace gfree {

/// Malformed graph text, bad generator parameters, bad pattern syntax.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact search was asked to run on an instance larger than its cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, int n, int cap)
        : std::runtime_error(what + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
          n_(n),
          cap_(cap)
    {
    }
    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

/// A certified result failed a property the exact search guarantees.
/// Seeing this means a solver bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gfree
