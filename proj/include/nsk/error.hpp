#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsk {

enum class ErrorKind {
  Syntax,          // malformed .tri / .nsc text
  InvalidGluing,   // involution, range or face-bijection violation
  UngluedFace,     // boundary faces are not supported
  NonManifold,     // vertex link not a sphere, disconnected table, ...
  NonOrientable,   // M or a surface component is not orientable
  Coordinates,     // wrong length, negative entries, quad condition, matching
  Incompatible,    // Haken sum of surfaces with clashing quad types
  Overflow,        // checked integer arithmetic failed
  Envelope,        // enumeration request outside the supported envelope
  Io,
  Internal,        // an internal consistency assertion fired
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// 1-based input line for syntax errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace nsk
