#pragma once
#include <stdexcept>
#include <string>

namespace lcx {

// Base class for all user-facing failures.  Anything escaping as a plain
// std::exception is treated as an internal error by the CLI.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure: missing file, unreadable path, write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input content.  Carries a line number (1-based, 0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid configuration or option values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation applied to inputs outside its domain (e.g. correlating
// disjoint corpora, constant input to a correlation).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inputs that are individually well-formed but mutually inconsistent
// (mismatched ids between feature files, tree/token mismatches).
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Content that fails validation rules (duplicate ids, bad schema).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant — a bug, not a user mistake.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcx
