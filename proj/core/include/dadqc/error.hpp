#pragma once

#include <stdexcept>
#include <string>

namespace dadqc {

// Numerical failure: iteration caps, adaptive non-convergence, retry
// exhaustion. Mapped to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Problem in an experiment config file, carrying the offending line number.
// Mapped to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                      : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace dadqc
