// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bathnet {

// Network spec failed validation; carries the full violation list.
class InvalidSpecError : public std::runtime_error {
public:
    explicit InvalidSpecError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string msg = "invalid network spec:";
        for (const auto& s : v) msg += "\n  - " + s;
        return msg;
    }
    std::vector<std::string> violations_;
};

// A resolvent or denominator was singular (or numerically unusable) at a
// frequency; carries the offending frequency.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double omega_ghz)
        : std::runtime_error(what + " at omega = " + std::to_string(omega_ghz) + " GHz"),
          omega_ghz_(omega_ghz) {}

    double omega_ghz() const { return omega_ghz_; }

private:
    double omega_ghz_;
};

// Structured-text document did not match the expected schema; the message
// carries the field path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sampled correlation had not decayed at the end of its time grid.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

// File or stream I/O failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bathnet
