#pragma once

// Portable JSON document of a decoded program, consumed by the web wizard.
// Schema: docs/interchange.md.

#include "sqry/ir.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace sqry {

inline constexpr const char* kInterchangeFormat = "sqry-tree";

class InterchangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws InterchangeError when a string is not valid UTF-8.
nlohmann::json to_interchange(const Program& program);
/// Throws InterchangeError on schema violations or invalid trees.
Program from_interchange(const nlohmann::json& document);

} // namespace sqry
