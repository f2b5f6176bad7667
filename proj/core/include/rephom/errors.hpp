#pragma once

#include <stdexcept>
#include <string>

namespace rephom {

// Raised when user-supplied data (files, CLI arguments, JSON payloads) is
// malformed or inconsistent.  Maps to process exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal mathematical verification fails (a differential that
// does not square to zero, an inconsistent linear system, a mismatched
// identity).  Maps to process exit code 1.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rephom
