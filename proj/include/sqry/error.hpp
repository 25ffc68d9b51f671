#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqry {

/// A Program violates a structural invariant (empty Ask, duplicate match,
/// unordered thresholds, forbidden control character).
class InvalidProgram : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line), message_(message) {}

    int line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    std::string message_;
};

class EncodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityExceeded : public std::runtime_error {
public:
    CapacityExceeded(std::size_t bits, std::size_t budget_bytes)
        : std::runtime_error("payload of " + std::to_string(bits) + " bits needs " +
                             std::to_string((bits + 7) / 8) + " bytes, budget is " +
                             std::to_string(budget_bytes) + " bytes"),
          bits_(bits), budget_bytes_(budget_bytes) {}

    std::size_t bits() const noexcept { return bits_; }
    std::size_t budget_bytes() const noexcept { return budget_bytes_; }

private:
    std::size_t bits_;
    std::size_t budget_bytes_;
};

class QrError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sqry
