#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mimicry {

/// Base for every library error. The message is prefixed with the module
/// that raised it so the CLI can surface "dyads: ..." style diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// A malformed input record. `line` is 1-based and counts the header.
class ParseError : public Error {
 public:
  ParseError(std::string module, std::size_t line, const std::string& what)
      : Error(std::move(module), "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NoPairsError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace mimicry
