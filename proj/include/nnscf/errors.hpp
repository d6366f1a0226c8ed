#pragma once

#include <stdexcept>
#include <string>

namespace nnscf {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid input: non-prime characteristic, reducible modulus,
// unknown poset element, relation cycle, mismatched fields, malformed arcs.
struct value_error : error {
  using error::error;
};

// Malformed serialized input (JSON shape or flag values).
struct parse_error : error {
  using error::error;
};

// An enumeration would exceed the configured size guard.
struct limit_error : error {
  using error::error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct check_error : error {
  using error::error;
};

}  // namespace nnscf
