#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

/// Malformed arguments: bad indices, mismatched alphabets or degrees,
/// non-normal subgroups, unparsable cycle notation.
class InvalidInput : public std::invalid_argument {
  public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A request outside what the toolkit models (class > 3, b >= 2 boundary
/// presentations, unknown families).
class Unsupported : public std::runtime_error {
  public:
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

/// A closure, search or enumeration guard tripped.
class BoundExceeded : public std::runtime_error {
  public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace braidkit
