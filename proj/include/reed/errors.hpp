#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reed {

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// graph6 decoding failure; offset is the byte position in the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class UnsupportedSize : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class CatalogError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Failure while ingesting a graph6 stream; line numbers are 1-based.
class StreamError : public std::runtime_error {
public:
  StreamError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace reed
