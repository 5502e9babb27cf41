#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gluing {

/// Input is outside a documented size guard (vertex budget, enumeration limit).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A documented precondition does not hold (e.g. a disconnected pattern).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed argument to an otherwise valid call.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs fall outside the class the construction or formula covers.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation is undefined for this input (e.g. structure graph of a
/// gluing that is not uniquely decomposable).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed. Always indicates a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", offset " + std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace gluing
