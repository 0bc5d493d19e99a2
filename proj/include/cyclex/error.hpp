#pragma once

#include <stdexcept>
#include <string>

namespace cyclex {

/// Input exceeds a configured size cap (vertex count, composition size, ...).
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

/// Malformed graph6 / edge-list / catalog input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclex
