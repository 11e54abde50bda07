#pragma once

#include <stdexcept>
#include <string>

namespace mlk {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch between tensors/matrices; the message names the offending axes.
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Malformed textual input (bundle files, rational literals, CLI values).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A required piece of a bundle is absent; the message names the component.
struct MissingComponentError : Error {
  explicit MissingComponentError(const std::string& what) : Error(what) {}
};

}  // namespace mlk
