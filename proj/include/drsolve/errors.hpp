#pragma once

#include <stdexcept>
#include <string>

namespace drsolve {

/// Misconfiguration detected before or during a run (bad parameter ranges,
/// unsupported granularity, unwritable output, ...).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two point vectors (or a projection output) with incompatible block layouts.
class LayoutError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

/// Input file rejected; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

}  // namespace drsolve
